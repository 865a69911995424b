#pragma once

// Finite quasi-orders, their combinators, bad sequences and the tree of
// bad sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ordnot {

using Index = std::uint32_t;

// Carrier plus a reflexive, transitive relation stored as a dense matrix.
class FiniteQO {
 public:
  // Validates reflexivity and transitivity; throws DomainError.
  FiniteQO(std::vector<std::string> carrier, std::vector<std::vector<bool>> le);

  // Builds the reflexive-transitive closure of the given pairs.
  static FiniteQO closure_of(std::vector<std::string> carrier,
                             const std::vector<std::pair<Index, Index>>& pairs);
  static FiniteQO chain(std::size_t n);      // a0 < a1 < ...
  static FiniteQO antichain(std::size_t n);  // a0, a1, ... pairwise incomparable
  static FiniteQO singleton() { return chain(1); }

  std::size_t size() const { return carrier_.size(); }
  bool le(Index a, Index b) const { return le_[a * carrier_.size() + b]; }
  bool equivalent(Index a, Index b) const { return le(a, b) && le(b, a); }
  bool total() const;
  const std::string& name(Index a) const { return carrier_.at(a); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  std::optional<Index> find(const std::string& name) const;
  // Number of classes of mutually related elements.
  std::size_t quotient_size() const;
  // Ordered pairs (a, b) with a <= b.
  std::vector<std::pair<Index, Index>> relation_pairs() const;

  friend bool operator==(const FiniteQO&, const FiniteQO&) = default;

 private:
  FiniteQO() = default;
  std::vector<std::string> carrier_;
  std::vector<bool> le_;
};

// {"carrier": [...], "le": [[a, b], ...], "closure": bool}. With closure
// false the listed pairs must already be reflexive and transitive.
FiniteQO qo_from_json(const nlohmann::json& j);
nlohmann::json qo_to_json(const FiniteQO& q);

// Every quasi-order on {0, ..., n-1}, in a fixed order (n <= 4).
std::vector<FiniteQO> qo_catalogue(std::size_t n);

// Componentwise order on P x Q; carrier names "(p,q)".
FiniteQO product(const FiniteQO& p, const FiniteQO& q);
// P then Q, every P element below every Q element; names "inl(p)", "inr(q)".
FiniteQO sum(const FiniteQO& p, const FiniteQO& q);
// P and Q side by side, cross pairs incomparable.
FiniteQO disjoint_union(const FiniteQO& p, const FiniteQO& q);

enum class FoldMode { plus, times, dunion };

// n x Q with carrier (m, q) listed as m * |Q| + q, names "(m,q)":
//   plus:   m1 < m2  or (m1 = m2 and q1 <= q2)
//   times:  m1 <= m2 and q1 <= q2
//   dunion: m1 = m2  and q1 <= q2
FiniteQO n_fold(const FiniteQO& q, std::size_t n, FoldMode mode);
std::optional<FoldMode> parse_fold_mode(const std::string& s);
std::string to_string(FoldMode mode);

struct GoodPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const GoodPair&, const GoodPair&) = default;
};

// Lexicographically least (i, j), i < j, with seq[i] <= seq[j].
std::optional<GoodPair> good_pair(const std::vector<Index>& seq, const FiniteQO& q);

struct LongestBad {
  std::size_t length = 0;
  std::vector<Index> witness;
};

// Depth-first search over bad sequences. `budget` bounds visited nodes.
LongestBad longest_bad(const FiniteQO& q, std::size_t budget = 50'000'000);

// All bad sequences ordered by end-extension; node 0 is the empty sequence
// and nodes are stored in depth-first preorder.
class BadSeqTree {
 public:
  static BadSeqTree build(const FiniteQO& q, std::size_t budget = 10'000'000);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Index>& sequence(std::size_t node) const { return nodes_.at(node); }
  // Parent of the root is nullopt.
  std::optional<std::size_t> parent(std::size_t node) const;
  std::optional<std::size_t> find(const std::vector<Index>& seq) const;
  const FiniteQO& order() const { return order_; }

 private:
  BadSeqTree(FiniteQO q) : order_(std::move(q)) {}
  FiniteQO order_;
  std::vector<std::vector<Index>> nodes_;
  std::vector<std::size_t> parents_;
};

// Kleene-Brouwer order on sequences of carrier indices: s < t iff s properly
// extends t, or s[k] < t[k] at the first position k where they differ.
std::strong_ordering kb_compare(const std::vector<Index>& s, const std::vector<Index>& t);

// Node ids of the tree, ascending in the Kleene-Brouwer order.
std::vector<std::size_t> kb_linearize(const BadSeqTree& tree);

struct ReificationResult {
  bool ok = true;
  // First violating edge as (child, parent) node ids, in preorder of the child.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

// Checks f(a) <= f(b) whenever a extends b by one entry (f(a) < f(b) when
// strict). `values[node]` is f(node); `less` is the strict order on values.
template <typename Value, typename Less = std::less<Value>>
ReificationResult check_reification(const BadSeqTree& tree, const std::vector<Value>& values,
                                    bool strict = false, Less less = {});

}  // namespace ordnot

#include "ordnot/detail/reification.ipp"
