#ifndef RLSHIFT_ROOTDATA_HPP
#define RLSHIFT_ROOTDATA_HPP

#include "rootdata/chevalley.hpp"
#include "rootdata/matrix.hpp"
#include "rootdata/root_system.hpp"

#endif
