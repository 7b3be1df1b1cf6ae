#ifndef RLSHIFT_EXACTALG_HPP
#define RLSHIFT_EXACTALG_HPP

#include "exactalg/frac_laurent.hpp"
#include "exactalg/polynomial.hpp"
#include "exactalg/rational.hpp"
#include "exactalg/rational_function.hpp"

#endif
