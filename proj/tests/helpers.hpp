// Test suites share the library's seeded random generators.

#pragma once

#include "fgb/random.hpp"

namespace fgb::testing {

using fgb::Rng;
using fgb::random_automorphism;
using fgb::random_boundary_element;
using fgb::random_endomorphism;
using fgb::random_letter;
using fgb::random_permutation;
using fgb::random_short_move;
using fgb::random_sigma_element;
using fgb::random_word;

}  // namespace fgb::testing
