#include "ordnot/generators.hpp"

#include <algorithm>

namespace ordnot {

namespace {

void combine(const std::vector<Ordinal>& exponents, const CnfShape& shape, std::size_t from,
             std::vector<CnfTerm>& prefix, std::vector<Ordinal>& out) {
  out.push_back(Ordinal::from_terms(prefix));
  if (prefix.size() == shape.max_terms) return;
  // Exponents are ascending, so walk them backwards to keep terms decreasing.
  for (std::size_t i = from; i-- > 0;) {
    for (std::uint32_t c = 1; c <= shape.max_coeff; ++c) {
      prefix.push_back({exponents[i], c});
      combine(exponents, shape, i, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Ordinal> enumerate_cnf(std::size_t depth, const CnfShape& shape) {
  std::vector<Ordinal> level;
  for (std::uint32_t k = 0; k <= shape.max_coeff; ++k) level.push_back(Ordinal::natural(k));
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Ordinal> next;
    std::vector<CnfTerm> prefix;
    combine(level, shape, level.size(), prefix, next);
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

Ordinal random_ordinal(std::mt19937_64& rng, std::size_t depth) {
  auto coefficient = [&rng]() -> Natural {
    if (std::uniform_int_distribution<int>(0, 49)(rng) == 0) {
      Natural big = 1;
      for (int i = 0; i < 20; ++i) big = big * 10 + std::uniform_int_distribution<int>(0, 9)(rng);
      return big;
    }
    return std::uniform_int_distribution<int>(1, 5)(rng);
  };
  if (depth == 0) {
    if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) return {};
    return Ordinal::natural(coefficient());
  }
  const int count = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Ordinal> exps;
  for (int i = 0; i < count; ++i) exps.push_back(random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<CnfTerm> terms;
  for (auto& e : exps) terms.push_back({std::move(e), coefficient()});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace ordnot
