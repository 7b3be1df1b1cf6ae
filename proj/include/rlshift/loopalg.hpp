#ifndef RLSHIFT_LOOPALG_HPP
#define RLSHIFT_LOOPALG_HPP

#include "loopalg/loop_element.hpp"
#include "loopalg/shifts.hpp"
#include "loopalg/verify.hpp"

#endif
