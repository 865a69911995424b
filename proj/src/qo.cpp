#include "ordnot/qo.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "ordnot/error.hpp"

namespace ordnot {

FiniteQO::FiniteQO(std::vector<std::string> carrier, std::vector<std::vector<bool>> le)
    : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.size();
  if (le.size() != n) throw DomainError("relation matrix does not match carrier size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (carrier_[i] == carrier_[j]) throw DomainError("duplicate carrier element '" + carrier_[i] + "'");
  le_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (le[a].size() != n) throw DomainError("relation matrix is not square");
    for (std::size_t b = 0; b < n; ++b) le_[a * n + b] = le[a][b];
  }
  for (Index a = 0; a < n; ++a)
    if (!this->le(a, a)) throw DomainError("relation is not reflexive at '" + carrier_[a] + "'");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (!this->le(a, b)) continue;
      for (Index c = 0; c < n; ++c)
        if (this->le(b, c) && !this->le(a, c))
          throw DomainError("relation is not transitive: " + carrier_[a] + " <= " + carrier_[b] +
                            " <= " + carrier_[c]);
    }
}

FiniteQO FiniteQO::closure_of(std::vector<std::string> carrier,
                              const std::vector<std::pair<Index, Index>>& pairs) {
  const std::size_t n = carrier.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw DomainError("relation pair outside the carrier");
    le[a][b] = true;
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  return FiniteQO(std::move(carrier), std::move(le));
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace

FiniteQO FiniteQO::chain(std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) le[i][j] = true;
  return FiniteQO(default_names(n), std::move(le));
}

FiniteQO FiniteQO::antichain(std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  return FiniteQO(default_names(n), std::move(le));
}

bool FiniteQO::total() const {
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < size(); ++b)
      if (!le(a, b) && !le(b, a)) return false;
  return true;
}

std::optional<Index> FiniteQO::find(const std::string& name) const {
  for (Index i = 0; i < carrier_.size(); ++i)
    if (carrier_[i] == name) return i;
  return std::nullopt;
}

std::size_t FiniteQO::quotient_size() const {
  std::size_t classes = 0;
  for (Index a = 0; a < size(); ++a) {
    bool representative = true;
    for (Index b = 0; b < a && representative; ++b)
      if (equivalent(a, b)) representative = false;
    if (representative) ++classes;
  }
  return classes;
}

std::vector<std::pair<Index, Index>> FiniteQO::relation_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < size(); ++b)
      if (le(a, b)) out.emplace_back(a, b);
  return out;
}

FiniteQO qo_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_array())
    throw DomainError("quasi-order JSON needs a \"carrier\" array");
  std::vector<std::string> carrier;
  for (const auto& e : j["carrier"]) {
    if (!e.is_string()) throw DomainError("carrier elements must be strings");
    carrier.push_back(e.get<std::string>());
  }
  auto index_of = [&](const nlohmann::json& e) -> Index {
    if (!e.is_string()) throw DomainError("relation entries must be element names");
    const auto name = e.get<std::string>();
    auto it = std::find(carrier.begin(), carrier.end(), name);
    if (it == carrier.end()) throw DomainError("relation mentions unknown element '" + name + "'");
    return static_cast<Index>(it - carrier.begin());
  };
  std::vector<std::pair<Index, Index>> pairs;
  if (j.contains("le")) {
    for (const auto& p : j["le"]) {
      if (!p.is_array() || p.size() != 2) throw DomainError("relation entries must be [a, b] pairs");
      pairs.emplace_back(index_of(p[0]), index_of(p[1]));
    }
  }
  const bool closure = j.value("closure", false);
  if (closure) return FiniteQO::closure_of(std::move(carrier), pairs);
  std::vector<std::vector<bool>> le(carrier.size(), std::vector<bool>(carrier.size(), false));
  for (auto [a, b] : pairs) le[a][b] = true;
  return FiniteQO(std::move(carrier), std::move(le));
}

nlohmann::json qo_to_json(const FiniteQO& q) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : q.relation_pairs()) pairs.push_back({q.name(a), q.name(b)});
  return {{"carrier", q.carrier()}, {"le", pairs}, {"closure", false}};
}

std::vector<FiniteQO> qo_catalogue(std::size_t n) {
  if (n > 4) throw DomainError("qo_catalogue supports at most 4 elements");
  std::vector<std::pair<Index, Index>> off;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::vector<FiniteQO> out;
  for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1u) le[off[k].first][off[k].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) transitive = false;
    if (transitive) out.emplace_back(default_names(n), std::move(le));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combinators

FiniteQO product(const FiniteQO& p, const FiniteQO& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < q.size(); ++b) names.push_back("(" + p.name(a) + "," + q.name(b) + ")");
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index p1 = x / q.size(), q1 = x % q.size();
      const Index p2 = y / q.size(), q2 = y % q.size();
      le[x][y] = p.le(p1, p2) && q.le(q1, q2);
    }
  return FiniteQO(std::move(names), std::move(le));
}

namespace {

FiniteQO tagged_union(const FiniteQO& p, const FiniteQO& q, bool p_below_q) {
  const std::size_t n = p.size() + q.size();
  std::vector<std::string> names;
  for (Index a = 0; a < p.size(); ++a) names.push_back("inl(" + p.name(a) + ")");
  for (Index b = 0; b < q.size(); ++b) names.push_back("inr(" + q.name(b) + ")");
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  const Index split = static_cast<Index>(p.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const bool xp = x < split, yp = y < split;
      if (xp && yp)
        le[x][y] = p.le(x, y);
      else if (!xp && !yp)
        le[x][y] = q.le(x - split, y - split);
      else
        le[x][y] = p_below_q && xp && !yp;
    }
  return FiniteQO(std::move(names), std::move(le));
}

}  // namespace

FiniteQO sum(const FiniteQO& p, const FiniteQO& q) { return tagged_union(p, q, true); }

FiniteQO disjoint_union(const FiniteQO& p, const FiniteQO& q) { return tagged_union(p, q, false); }

FiniteQO n_fold(const FiniteQO& q, std::size_t n, FoldMode mode) {
  if (n == 0) throw DomainError("n_fold needs n >= 1");
  const std::size_t k = q.size();
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m)
    for (Index a = 0; a < k; ++a) names.push_back("(" + std::to_string(m) + "," + q.name(a) + ")");
  std::vector<std::vector<bool>> le(n * k, std::vector<bool>(n * k, false));
  for (std::size_t x = 0; x < n * k; ++x)
    for (std::size_t y = 0; y < n * k; ++y) {
      const std::size_t m1 = x / k, m2 = y / k;
      const bool qle = q.le(static_cast<Index>(x % k), static_cast<Index>(y % k));
      switch (mode) {
        case FoldMode::plus:
          le[x][y] = m1 < m2 || (m1 == m2 && qle);
          break;
        case FoldMode::times:
          le[x][y] = m1 <= m2 && qle;
          break;
        case FoldMode::dunion:
          le[x][y] = m1 == m2 && qle;
          break;
      }
    }
  return FiniteQO(std::move(names), std::move(le));
}

std::optional<FoldMode> parse_fold_mode(const std::string& s) {
  if (s == "plus") return FoldMode::plus;
  if (s == "times") return FoldMode::times;
  if (s == "dunion") return FoldMode::dunion;
  return std::nullopt;
}

std::string to_string(FoldMode mode) {
  switch (mode) {
    case FoldMode::plus:
      return "plus";
    case FoldMode::times:
      return "times";
    case FoldMode::dunion:
      return "dunion";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Bad sequences

std::optional<GoodPair> good_pair(const std::vector<Index>& seq, const FiniteQO& q) {
  for (Index e : seq)
    if (e >= q.size()) throw DomainError("sequence element " + std::to_string(e) + " outside the carrier");
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (q.le(seq[i], seq[j])) return GoodPair{i, j};
  return std::nullopt;
}

namespace {

// Longest bad continuation depends only on the set of elements not above any
// chosen element, so the search memoizes on that set.
class LongestBadSearch {
 public:
  LongestBadSearch(const FiniteQO& q, std::atomic<std::size_t>& visited, std::size_t budget)
      : q_(q), visited_(visited), budget_(budget) {
    up_.resize(q.size());
    for (Index a = 0; a < q.size(); ++a)
      for (Index b = 0; b < q.size(); ++b)
        if (q.le(a, b)) up_[a] |= std::uint64_t{1} << b;
  }

  std::size_t longest(std::uint64_t available) {
    if (available == 0) return 0;
    if (auto it = memo_.find(available); it != memo_.end()) return it->second.first;
    if (visited_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("longest_bad visited more than " + std::to_string(budget_) + " states");
    std::size_t best = 0;
    Index best_e = 0;
    for (Index e = 0; e < q_.size(); ++e) {
      if (!(available >> e & 1u)) continue;
      const std::size_t len = 1 + longest(available & ~up_[e]);
      if (len >= best) {
        best = len;
        best_e = e;
      }
    }
    memo_.emplace(available, std::make_pair(best, best_e));
    return best;
  }

  std::vector<Index> witness(std::uint64_t available) {
    std::vector<Index> out;
    while (available != 0) {
      longest(available);
      const Index e = memo_.at(available).second;
      out.push_back(e);
      available &= ~up_[e];
    }
    return out;
  }

  std::uint64_t up(Index e) const { return up_[e]; }

 private:
  const FiniteQO& q_;
  std::atomic<std::size_t>& visited_;
  std::size_t budget_;
  std::vector<std::uint64_t> up_;
  std::unordered_map<std::uint64_t, std::pair<std::size_t, Index>> memo_;
};

}  // namespace

LongestBad longest_bad(const FiniteQO& q, std::size_t budget) {
  if (q.size() == 0) return {};
  if (q.size() > 64) throw DomainError("longest_bad supports carriers of at most 64 elements");
  const std::uint64_t all = q.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q.size()) - 1;

  // One branch per first element. Ties go to the largest carrier index at
  // every step, so chains come out in descending order.
  std::atomic<std::size_t> visited{0};
  std::vector<LongestBad> branch(q.size());
  bool exhausted = false;
#pragma omp parallel for schedule(dynamic)
  for (Index first = 0; first < q.size(); ++first) {
    try {
      LongestBadSearch search(q, visited, budget);
      const std::uint64_t rest = all & ~search.up(first);
      branch[first].length = 1 + search.longest(rest);
      branch[first].witness = search.witness(rest);
      branch[first].witness.insert(branch[first].witness.begin(), first);
    } catch (const BudgetExceeded&) {
#pragma omp atomic write
      exhausted = true;
    }
  }
  if (exhausted) throw BudgetExceeded("longest_bad visited more than " + std::to_string(budget) + " states");
  LongestBad best;
  for (auto& b : branch)
    if (b.length >= best.length) best = std::move(b);
  return best;
}

// ---------------------------------------------------------------------------
// Tree of bad sequences

BadSeqTree BadSeqTree::build(const FiniteQO& q, std::size_t budget) {
  BadSeqTree tree(q);
  std::vector<Index> current;
  std::function<void(std::size_t)> visit = [&](std::size_t parent) {
    for (Index e = 0; e < q.size(); ++e) {
      bool ok = true;
      for (Index prev : current)
        if (q.le(prev, e)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (tree.nodes_.size() >= budget)
        throw BudgetExceeded("bad-sequence tree has more than " + std::to_string(budget) + " nodes");
      current.push_back(e);
      const std::size_t id = tree.nodes_.size();
      tree.nodes_.push_back(current);
      tree.parents_.push_back(parent);
      visit(id);
      current.pop_back();
    }
  };
  tree.nodes_.push_back({});
  tree.parents_.push_back(0);
  visit(0);
  return tree;
}

std::optional<std::size_t> BadSeqTree::parent(std::size_t node) const {
  if (node == 0) return std::nullopt;
  return parents_.at(node);
}

std::optional<std::size_t> BadSeqTree::find(const std::vector<Index>& seq) const {
  // Preorder with children in carrier order: walk down one entry at a time.
  std::size_t node = 0;
  for (std::size_t depth = 0; depth < seq.size(); ++depth) {
    std::optional<std::size_t> next;
    for (std::size_t c = node + 1; c < nodes_.size() && nodes_[c].size() > depth; ++c) {
      if (nodes_[c].size() == depth + 1 && parents_[c] == node && nodes_[c][depth] == seq[depth]) {
        next = c;
        break;
      }
    }
    if (!next) return std::nullopt;
    node = *next;
  }
  return node;
}

std::strong_ordering kb_compare(const std::vector<Index>& s, const std::vector<Index>& t) {
  const std::size_t n = std::min(s.size(), t.size());
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] != t[k]) return s[k] <=> t[k];
  // One is a prefix of the other: the longer one comes first.
  return t.size() <=> s.size();
}

std::vector<std::size_t> kb_linearize(const BadSeqTree& tree) {
  std::vector<std::size_t> order(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return kb_compare(tree.sequence(a), tree.sequence(b)) < 0;
  });
  return order;
}

}  // namespace ordnot
