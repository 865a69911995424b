#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "ordnot/error.hpp"
#include "ordnot/qo.hpp"

using namespace ordnot;

namespace {

using Seq = std::vector<Index>;

// All bad sequences, found by trying every arrangement of every subset.
std::set<Seq> brute_bad_sequences(const FiniteQO& q) {
  std::set<Seq> out;
  std::vector<Index> items(q.size());
  for (Index i = 0; i < q.size(); ++i) items[i] = i;
  for (std::uint32_t mask = 0; mask < (1u << q.size()); ++mask) {
    Seq pick;
    for (Index i = 0; i < q.size(); ++i)
      if (mask >> i & 1u) pick.push_back(i);
    do {
      bool bad = true;
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = i + 1; j < pick.size(); ++j) bad = bad && !q.le(pick[i], pick[j]);
      if (bad) out.insert(pick);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(FiniteQO({"a", "b"}, {{true, false}, {false, false}}), DomainError);
  CHECK_THROWS_AS(FiniteQO({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
                  DomainError);
  CHECK_THROWS_AS(FiniteQO({"a"}, {{true, true}}), DomainError);
  const FiniteQO q = FiniteQO::closure_of({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(q.le(0, 2));
  CHECK_FALSE(q.le(2, 0));
  CHECK(q.total());
  CHECK(q.quotient_size() == 3);
  const FiniteQO e = FiniteQO::closure_of({"a", "b", "c"}, {{0, 1}, {1, 0}});
  CHECK(e.equivalent(0, 1));
  CHECK(e.quotient_size() == 2);
  CHECK_FALSE(e.total());
}

TEST_CASE("json") {
  const auto j = nlohmann::json::parse(R"({"carrier":["x","y"],"le":[["x","y"]],"closure":true})");
  const FiniteQO q = qo_from_json(j);
  CHECK(q.le(0, 1));
  CHECK(q.le(1, 1));
  CHECK(qo_from_json(qo_to_json(q)) == q);
  CHECK_THROWS_AS(qo_from_json(nlohmann::json::parse(R"({"carrier":["x","y"],"le":[["x","y"]]})")), DomainError);
  CHECK_THROWS_AS(qo_from_json(nlohmann::json::parse(R"({"carrier":["x"],"le":[["x","z"]],"closure":true})")),
                  DomainError);
  CHECK_THROWS_AS(qo_from_json(nlohmann::json::parse(R"([1,2])")), DomainError);
}

TEST_CASE("catalogue sizes") {
  // Quasi-orders on a labelled n-set: 1, 1, 4, 29, 355.
  CHECK(qo_catalogue(0).size() == 1);
  CHECK(qo_catalogue(1).size() == 1);
  CHECK(qo_catalogue(2).size() == 4);
  CHECK(qo_catalogue(3).size() == 29);
  CHECK(qo_catalogue(4).size() == 355);
  CHECK_THROWS_AS(qo_catalogue(5), DomainError);
}

TEST_CASE("combinators") {
  const FiniteQO c2 = FiniteQO::chain(2);
  const FiniteQO p = product(c2, c2);
  const auto idx = [&](const char* n) { return *p.find(n); };
  CHECK_FALSE(p.le(idx("(a1,a0)"), idx("(a0,a1)")));
  CHECK(p.le(idx("(a0,a1)"), idx("(a1,a1)")));
  CHECK(p.size() == 4);

  const FiniteQO a2 = FiniteQO::antichain(2);
  const FiniteQO s = sum(a2, c2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 2; j < 4; ++j) {
      CHECK(s.le(i, j));
      CHECK_FALSE(s.le(j, i));
    }
  CHECK(s.name(0) == "inl(a0)");
  CHECK(s.name(3) == "inr(a1)");

  const FiniteQO d = disjoint_union(a2, c2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 2; j < 4; ++j) {
      CHECK_FALSE(d.le(i, j));
      CHECK_FALSE(d.le(j, i));
    }
  CHECK(d.le(2, 3));
}

TEST_CASE("n-fold orders") {
  const FiniteQO q = FiniteQO::antichain(2);
  const FiniteQO plus = n_fold(q, 2, FoldMode::plus);
  const FiniteQO times = n_fold(q, 2, FoldMode::times);
  const FiniteQO dunion = n_fold(q, 2, FoldMode::dunion);
  // Carrier (m, q) at m * |Q| + q.
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) {
      CHECK(plus.le(a, 2 + b));
      CHECK(times.le(a, 2 + b) == q.le(a, b));
      CHECK_FALSE(dunion.le(a, 2 + b));
    }
  CHECK_FALSE(dunion.le(0, 2));
  CHECK(plus.name(3) == "(1,a1)");
  CHECK(parse_fold_mode("times") == FoldMode::times);
  CHECK_FALSE(parse_fold_mode("max"));
  CHECK(to_string(FoldMode::dunion) == "dunion");
}

TEST_CASE("extension chain on small catalogues") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& q : qo_catalogue(k))
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto plus = n_fold(q, n, FoldMode::plus);
        const auto times = n_fold(q, n, FoldMode::times);
        const auto dunion = n_fold(q, n, FoldMode::dunion);
        for (auto [a, b] : dunion.relation_pairs()) CHECK(times.le(a, b));
        for (auto [a, b] : times.relation_pairs()) CHECK(plus.le(a, b));
        if (q.total()) CHECK(plus.total());
      }
}

TEST_CASE("good pairs") {
  const FiniteQO c = FiniteQO::chain(2);
  CHECK(good_pair({0, 1}, c) == GoodPair{0, 1});
  CHECK_FALSE(good_pair({1, 0}, c));
  CHECK(good_pair({0, 0}, FiniteQO::antichain(2)) == GoodPair{0, 1});
  CHECK(good_pair({1, 0, 1, 0}, c) == GoodPair{0, 2});
  CHECK(good_pair({1, 1, 0, 1}, c) == GoodPair{0, 1});
  CHECK_FALSE(good_pair({}, c));
}

TEST_CASE("longest bad sequences") {
  CHECK(longest_bad(FiniteQO::chain(2)).length == 2);
  CHECK(longest_bad(FiniteQO::antichain(2)).length == 2);
  const FiniteQO c2 = FiniteQO::chain(2);
  const FiniteQO p = product(c2, c2);
  const auto lb = longest_bad(p);
  CHECK(lb.length == 4);
  std::vector<std::string> names;
  for (auto e : lb.witness) names.push_back(p.name(e));
  CHECK(names == std::vector<std::string>{"(a1,a1)", "(a1,a0)", "(a0,a1)", "(a0,a0)"});
  CHECK_THROWS_AS(longest_bad(FiniteQO::antichain(4), 3), BudgetExceeded);

  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& q : qo_catalogue(k)) {
      std::size_t longest = 0;
      for (const auto& s : brute_bad_sequences(q)) longest = std::max(longest, s.size());
      CHECK(longest_bad(q).length == longest);
    }
}

TEST_CASE("bad-sequence tree") {
  const FiniteQO q = FiniteQO::antichain(2);
  const auto tree = BadSeqTree::build(q);
  CHECK(tree.size() == 5);
  CHECK(tree.sequence(0).empty());
  CHECK_FALSE(tree.parent(0));
  const auto ab = tree.find({0, 1});
  REQUIRE(ab);
  CHECK(tree.parent(*ab) == tree.find({0}));
  CHECK_FALSE(tree.find({0, 0}));

  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& q4 : qo_catalogue(k)) {
      const auto t = BadSeqTree::build(q4);
      const auto expected = brute_bad_sequences(q4);
      std::set<Seq> got;
      for (std::size_t i = 0; i < t.size(); ++i) got.insert(t.sequence(i));
      CHECK(got == expected);
    }
  CHECK_THROWS_AS(BadSeqTree::build(FiniteQO::antichain(4), 10), BudgetExceeded);
}

TEST_CASE("Kleene-Brouwer order") {
  CHECK(kb_compare({0, 1}, {0}) == std::strong_ordering::less);
  CHECK(kb_compare({0}, {0, 1}) == std::strong_ordering::greater);
  CHECK(kb_compare({0, 5}, {1}) == std::strong_ordering::less);
  CHECK(kb_compare({}, {}) == std::strong_ordering::equal);
  CHECK(kb_compare({1}, {}) == std::strong_ordering::less);

  const FiniteQO q = FiniteQO::antichain(2);
  const auto tree = BadSeqTree::build(q);
  const auto order = kb_linearize(tree);
  std::vector<Seq> seqs;
  for (auto n : order) seqs.push_back(tree.sequence(n));
  CHECK(seqs == std::vector<Seq>{{0, 1}, {0}, {1, 0}, {1}, {}});
}

TEST_CASE("reification checks") {
  const FiniteQO q = FiniteQO::antichain(3);
  const auto tree = BadSeqTree::build(q);
  CHECK(check_reification(tree, std::vector<int>(tree.size(), 7)).ok);
  CHECK_FALSE(check_reification(tree, std::vector<int>(tree.size(), 7), true).ok);

  std::vector<int> reversed_depth(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) reversed_depth[i] = 10 - static_cast<int>(tree.sequence(i).size());
  CHECK(check_reification(tree, reversed_depth).ok);
  CHECK(check_reification(tree, reversed_depth, true).ok);

  auto bumped = reversed_depth;
  const auto node = *tree.find({2, 0});
  bumped[node] = 100;
  const auto r = check_reification(tree, bumped);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violation);
  CHECK(r.violation->first == node);
  CHECK(r.violation->second == *tree.find({2}));

  CHECK_THROWS_AS(check_reification(tree, std::vector<int>(2, 0)), DomainError);
}
