// Reference decision procedure for tree embeddability: every clause of the
// inductive definition is tried literally, and clause 3 ranges over every
// strictly increasing index map. Shares no code with the memoized version.

#include <vector>

#include "ordnot/error.hpp"
#include "ordnot/trees.hpp"

namespace ordnot {

namespace {

bool labels_in(const LabelledTree& t, const FiniteQO& q) {
  if (t.label >= q.size()) return false;
  for (const auto& c : t.children)
    if (!labels_in(c, q)) return false;
  return true;
}

bool oracle(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q);

// Clause 3 with an explicit list of candidate maps i_1 < ... < i_n.
bool some_index_map(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q) {
  const std::size_t n = t.children.size();
  const std::size_t m = s.children.size();
  if (n > m) return false;
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k;
  while (true) {
    bool all = true;
    for (std::size_t k = 0; k < n && all; ++k) all = oracle(t.children[k], s.children[idx[k]], q);
    if (all) return true;
    // Next combination in lexicographic order.
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) return false;
    ++idx[k - 1];
    for (std::size_t r = k; r < n; ++r) idx[r] = idx[r - 1] + 1;
  }
}

bool oracle(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q) {
  const bool clause1 = t.children.empty() && s.children.empty() && q.le(t.label, s.label);
  bool clause2 = false;
  for (const auto& si : s.children) clause2 = clause2 || oracle(t, si, q);
  const bool clause3 = q.le(t.label, s.label) && some_index_map(t, s, q);
  return clause1 || clause2 || clause3;
}

}  // namespace

bool embeds_oracle(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q) {
  if (!labels_in(t, q) || !labels_in(s, q)) throw DomainError("tree label outside the carrier");
  return oracle(t, s, q);
}

}  // namespace ordnot
