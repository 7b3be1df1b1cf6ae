#ifndef RLSHIFT_WEIGHTS_HPP
#define RLSHIFT_WEIGHTS_HPP

#include "weights/affine_weight.hpp"
#include "weights/branching.hpp"
#include "weights/young.hpp"

#endif
