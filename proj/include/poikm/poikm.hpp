#ifndef POIKM_POIKM_HPP_
#define POIKM_POIKM_HPP_

// Umbrella header for the whole library.

#include "block_monoid.hpp"
#include "congruence.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "green.hpp"
#include "partial_perm.hpp"
#include "presentations.hpp"
#include "rank.hpp"
#include "selftest.hpp"
#include "verify.hpp"

#endif  // POIKM_POIKM_HPP_
