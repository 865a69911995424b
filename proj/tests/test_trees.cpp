#include "doctest.h"

#include <algorithm>

#include "ordnot/error.hpp"
#include "ordnot/trees.hpp"

using namespace ordnot;

namespace {

LabelledTree tree(const char* text, const FiniteQO& q) { return parse_tree(text, q); }

}  // namespace

TEST_CASE("degree and node count") {
  const FiniteQO q({"q"}, {{true}});
  auto t = [&](const char* s) { return tree(s, q); };
  CHECK(degree(t("q[]")) == 0);
  CHECK(degree(t("q[q[],q[]]")) == 2);
  CHECK(degree(t("q[q[q[],q[],q[]]]")) == 3);
  CHECK(node_count(t("q[q[q[],q[],q[]]]")) == 5);
}

TEST_CASE("embedding examples") {
  const FiniteQO q({"q"}, {{true}});
  CHECK(embeds(tree("q[q[]]", q), tree("q[q[],q[]]", q), q));
  CHECK_FALSE(embeds(tree("q[q[],q[]]", q), tree("q[q[]]", q), q));
  CHECK(embeds(tree("q[q[],q[]]", q), tree("q[q[],q[]]", q), q));
  CHECK(embeds(tree("q[q[],q[]]", q), tree("q[q[q[],q[]]]", q), q));
  CHECK(embeds(tree("q[q[],q[]]", q), tree("q[q[q[]],q[]]", q), q));
  CHECK_FALSE(embeds(tree("q[q[q[]]]", q), tree("q[q[],q[]]", q), q));
}

TEST_CASE("labels follow the quasi-order") {
  const FiniteQO chain = FiniteQO::chain(2);  // a0 < a1
  const FiniteQO anti = FiniteQO::antichain(2);
  const auto leaf0 = LabelledTree::leaf(0);
  const auto leaf1 = LabelledTree::leaf(1);
  CHECK(embeds(leaf0, leaf1, chain));
  CHECK_FALSE(embeds(leaf1, leaf0, chain));
  CHECK_FALSE(embeds(leaf0, leaf1, anti));
  // A leaf embeds wherever some label is above it.
  const LabelledTree s{0, {leaf0, LabelledTree{0, {leaf1}}}};
  CHECK(embeds(leaf1, s, chain));
  CHECK(embeds(leaf1, s, anti));
  CHECK_FALSE(embeds(leaf1, LabelledTree{0, {leaf0}}, anti));
  // Into a leaf only leaves with a smaller label embed.
  for (const auto& t : enumerate_trees(chain, 3)) {
    const bool expect = t.children.empty() && chain.le(t.label, 1);
    CHECK(embeds(t, leaf1, chain) == expect);
  }
  CHECK_THROWS_AS(embeds(LabelledTree::leaf(7), leaf0, chain), DomainError);
}

TEST_CASE("embeds agrees with the brute-force oracle") {
  for (const auto& q : {FiniteQO::singleton(), FiniteQO::chain(2), FiniteQO::antichain(2)}) {
    const auto ts = enumerate_trees(q, 4);
    for (const auto& t : ts)
      for (const auto& s : ts) CHECK(embeds(t, s, q) == embeds_oracle(t, s, q));
  }
  const FiniteQO one = FiniteQO::singleton();
  const auto small = enumerate_trees(one, 3);
  REQUIRE(small.size() == 4);
  int related = 0;
  for (const auto& t : small)
    for (const auto& s : small) related += embeds_oracle(t, s, one);
  CHECK(related == 9);
}

TEST_CASE("larger trees against the oracle") {
  const FiniteQO q = FiniteQO::chain(2);
  const LabelledTree s = parse_tree("a1[a0[a1,a0[a0]],a1[a0,a1[a1,a0]],a0]", q);
  const auto ts = enumerate_trees(q, 5, {2, 5'000'000});
  for (const auto& t : ts) CHECK(embeds(t, s, q) == embeds_oracle(t, s, q));
}

TEST_CASE("enumeration counts") {
  const FiniteQO one = FiniteQO::singleton();
  CHECK(enumerate_trees(one, 1).size() == 1);
  CHECK(enumerate_trees(one, 3).size() == 4);
  CHECK(enumerate_trees(one, 5).size() == 1 + 1 + 2 + 5 + 14);
  CHECK(enumerate_trees(FiniteQO::antichain(2), 2).size() == 6);
  CHECK(enumerate_trees(one, 4, {1, 1000}).size() == 4);
  for (const auto& t : enumerate_trees(one, 5, {2, 1000})) CHECK(degree(t) <= 2);
  CHECK_THROWS_AS(enumerate_trees(one, 8, {std::nullopt, 50}), BudgetExceeded);
}

TEST_CASE("enumeration order") {
  const FiniteQO q = FiniteQO::antichain(2);
  const auto ts = enumerate_trees(q, 4);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CHECK(node_count(ts[i - 1]) <= node_count(ts[i]));
    CHECK_FALSE(ts[i - 1] == ts[i]);
  }
}

TEST_CASE("whistle") {
  const FiniteQO q({"q"}, {{true}});
  {
    Whistle w(q);
    CHECK_FALSE(w.feed(tree("q[]", q)));
    auto p = w.feed(tree("q[q[]]", q));
    REQUIRE(p);
    CHECK(*p == GoodPair{0, 1});
  }
  {
    Whistle w(q);
    CHECK_FALSE(w.feed(tree("q[q[],q[]]", q)));
    CHECK_FALSE(w.feed(tree("q[q[]]", q)));
    CHECK_FALSE(w.blown());
  }
  {
    Whistle w(q);
    const auto t = tree("q[q[q[]],q[]]", q);
    w.feed(t);
    CHECK(w.feed(t) == GoodPair{0, 1});
    // Sticky once blown.
    CHECK(w.feed(tree("q[]", q)) == GoodPair{0, 1});
    CHECK(w.fed() == 3);
  }
  {
    // Least j first, then least i.
    const FiniteQO anti = FiniteQO::antichain(2);
    Whistle w(anti);
    w.feed(LabelledTree::leaf(0));
    w.feed(LabelledTree::leaf(1));
    CHECK(w.feed(LabelledTree{1, {LabelledTree::leaf(0)}}) == GoodPair{0, 2});
  }
}

TEST_CASE("printing and parsing") {
  const FiniteQO q = FiniteQO::antichain(2);
  const LabelledTree t{0, {LabelledTree::leaf(1), LabelledTree{1, {LabelledTree::leaf(0)}}}};
  CHECK(to_string(t, q) == "a0[a1[],a1[a0[]]]");
  CHECK(parse_tree(" a0 [ a1 , a1[a0[]] ] ", q) == t);
  CHECK(parse_tree("a1", q) == LabelledTree::leaf(1));
  for (const char* bad : {"", "a0[", "a0[]]", "a0[,]", "[a0]", "a0 a1", "a0[a1,]"})
    CHECK_THROWS_AS(parse_tree(bad, q), ParseError);
  CHECK_THROWS_AS(parse_tree("zz[]", q), ParseError);

  std::vector<std::string> seen;
  const auto u = parse_tree("f[g[],f[x]]", [&](std::string_view name) {
    auto it = std::find(seen.begin(), seen.end(), name);
    if (it != seen.end()) return static_cast<Index>(it - seen.begin());
    seen.emplace_back(name);
    return static_cast<Index>(seen.size() - 1);
  });
  CHECK(seen == std::vector<std::string>{"f", "g", "x"});
  CHECK(node_count(u) == 4);
}

TEST_CASE("round trip on enumerated trees") {
  for (const auto& q : {FiniteQO::singleton(), FiniteQO::antichain(2)})
    for (const auto& t : enumerate_trees(q, 4)) {
      const auto s = to_string(t, q);
      CHECK(parse_tree(s, q) == t);
      CHECK(to_string(parse_tree(s, q), q) == s);
    }
}
