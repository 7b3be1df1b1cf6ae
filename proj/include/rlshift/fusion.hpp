#ifndef RLSHIFT_FUSION_HPP
#define RLSHIFT_FUSION_HPP

#include "fusion/character.hpp"
#include "fusion/fusion_table.hpp"
#include "fusion/verify.hpp"
#include "fusion/verlinde.hpp"
#include "fusion/weight_lattice.hpp"

#endif
