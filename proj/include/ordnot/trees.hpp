#pragma once

// Finite ordered trees labelled by a finite quasi-order, and the Kruskal
// embeddability relation t <= s:
//   1. t = p[], s = q[], p <= q;
//   2. s = q[s_1..s_m] and t <= s_i for some i;
//   3. t = p[t_1..t_n], s = q[s_1..s_m], p <= q, and there are
//      i_1 < ... < i_n with t_k <= s_{i_k}.
// Clause 3 is read with n >= 0, so p[] <= q[s_1..s_m] whenever p <= q.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordnot/qo.hpp"

namespace ordnot {

struct LabelledTree {
  Index label = 0;
  std::vector<LabelledTree> children;

  static LabelledTree leaf(Index label) { return {label, {}}; }
  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

std::size_t degree(const LabelledTree& t);
std::size_t node_count(const LabelledTree& t);

// Throws DomainError when a label of t or s lies outside Q's carrier.
bool embeds(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q);

// Brute force over every strictly increasing index map in clause 3, without
// memoization. Exponential; for cross-checking embeds().
bool embeds_oracle(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q);

struct TreeEnumOptions {
  std::optional<std::size_t> max_degree;  // nullopt: unbounded
  std::size_t budget = 5'000'000;
};

// Every tree with at most max_nodes nodes and branching degree within bound,
// ordered by node count, then root label, then children.
std::vector<LabelledTree> enumerate_trees(const FiniteQO& q, std::size_t max_nodes,
                                          const TreeEnumOptions& options = {});

// Online detector of the first good pair in a stream of trees.
class Whistle {
 public:
  explicit Whistle(FiniteQO q) : q_(std::move(q)) {}

  // Feeds the next tree. Returns the good pair (i, j) with the least j, and
  // the least i for that j, once one exists among the trees fed so far; after
  // that the same pair is reported on every feed.
  std::optional<GoodPair> feed(LabelledTree t);
  std::size_t fed() const { return history_.size(); }
  std::optional<GoodPair> blown() const { return pair_; }

 private:
  FiniteQO q_;
  std::vector<LabelledTree> history_;
  std::optional<GoodPair> pair_;
};

// Tree syntax: `x`, `x[]` (leaves), `x[t1,t2,...]`; whitespace insignificant.
// Labels are identifier-like runs of characters other than `[],` and space.
// Leaves print as `x[]`.
std::string to_string(const LabelledTree& t, const FiniteQO& q);
LabelledTree parse_tree(std::string_view text, const FiniteQO& q);
// Resolves each label through `intern`, for callers without a fixed carrier.
LabelledTree parse_tree(std::string_view text, const std::function<Index(std::string_view)>& intern);

}  // namespace ordnot
