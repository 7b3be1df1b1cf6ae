#ifndef RLSHIFT_EMBED_HPP
#define RLSHIFT_EMBED_HPP

#include "embed/embedding.hpp"
#include "embed/verify.hpp"

#endif
