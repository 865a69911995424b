#pragma once

// Deterministic value generators for the property suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ordnot/cnf.hpp"

namespace ordnot {

struct CnfShape {
  std::size_t max_terms = 2;
  std::uint32_t max_coeff = 2;
};

// Every CNF ordinal of height <= depth whose term lists, at every level,
// have at most max_terms terms and coefficients at most max_coeff. Depth 0
// yields the naturals 0..max_coeff. Ascending order, no duplicates.
std::vector<Ordinal> enumerate_cnf(std::size_t depth, const CnfShape& shape = {});

// Random ordinal of height <= depth; coefficients are mostly small, with an
// occasional 20-digit one.
Ordinal random_ordinal(std::mt19937_64& rng, std::size_t depth);

}  // namespace ordnot
