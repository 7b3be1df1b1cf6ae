#ifndef RLSHIFT_HPP
#define RLSHIFT_HPP

#include "rlshift/embed.hpp"
#include "rlshift/error.hpp"
#include "rlshift/exactalg.hpp"
#include "rlshift/fusion.hpp"
#include "rlshift/loopalg.hpp"
#include "rlshift/parallel.hpp"
#include "rlshift/report.hpp"
#include "rlshift/rootdata.hpp"
#include "rlshift/weights.hpp"

#endif
