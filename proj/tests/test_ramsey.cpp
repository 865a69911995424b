#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>

#include "ordnot/error.hpp"
#include "ordnot/ramsey.hpp"

using namespace ordnot;

namespace {

bool monochromatic(const Colouring& c, const std::vector<std::size_t>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (c.at(s[a], s[b]) != c.at(s[0], s[1])) return false;
  return true;
}

// Index sets of the given size in lexicographic order, by bitmask.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("colouring examples") {
  const FiniteQO anti({"a", "b"}, {{true, false}, {false, true}});
  const auto c1 = colour_bad_product_seq({{0, 1}, {1, 0}}, anti, 2);
  CHECK(c1.at(0, 1) == 0);
  const FiniteQO chain({"a", "b"}, {{true, true}, {false, true}});
  const auto c2 = colour_bad_product_seq({{1, 0}, {0, 1}}, chain, 2);
  CHECK(c2.at(0, 1) == 0);
  CHECK(c2.colours() == 2);
  // (a,b) then (b,b): a <= b and b <= b, a good pair.
  CHECK_THROWS_AS(colour_bad_product_seq({{0, 1}, {1, 1}}, chain, 2), DomainError);
  CHECK_THROWS_AS(colour_bad_product_seq({{0, 1}, {1}}, chain, 2), DomainError);
}

TEST_CASE("colour is the least failing component") {
  const FiniteQO chain = FiniteQO::chain(3);
  // Decreasing in the last component, equal before it.
  const std::vector<Tuple> seq = {{2, 0, 2}, {2, 0, 1}, {1, 2, 0}, {0, 1, 2}};
  const auto c = colour_bad_product_seq(seq, chain, 3);
  CHECK(c.at(0, 1) == 2);
  CHECK(c.at(0, 2) == 0);
  CHECK(c.at(1, 2) == 0);
  CHECK(c.at(2, 3) == 0);
  CHECK(c.at(0, 3) == 0);
  CHECK(to_string(c) == "(0,1):2 (0,2):0 (0,3):0 (1,2):0 (1,3):0 (2,3):0");
  CHECK(product_le({0, 1, 2}, {1, 1, 2}, chain));
  CHECK_FALSE(product_le({0, 2, 2}, {1, 1, 2}, chain));
}

TEST_CASE("homogeneous subsets") {
  Colouring constant(5, 1);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) constant.set(i, j, 0);
  CHECK(homogeneous_subset(constant, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});

  Colouring parity(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) parity.set(i, j, (j - i) % 2);
  std::optional<std::vector<std::size_t>> expected;
  for (const auto& s : subsets(4, 3))
    if (monochromatic(parity, s)) {
      expected = s;
      break;
    }
  CHECK(homogeneous_subset(parity, 3) == expected);
  CHECK_FALSE(expected);  // (j - i) odd for two of any three indices' gaps

  CHECK(homogeneous_subset(parity, 2) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(homogeneous_subset(parity, 1), DomainError);
  CHECK_FALSE(homogeneous_subset(parity, 5));
}

TEST_CASE("homogeneous search agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng() % 7;
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    Colouring c(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.set(i, j, static_cast<std::uint32_t>(rng() % k));
    for (std::size_t size = 2; size <= n; ++size) {
      std::optional<std::vector<std::size_t>> expected;
      for (const auto& s : subsets(n, size))
        if (monochromatic(c, s)) {
          expected = s;
          break;
        }
      CHECK(homogeneous_subset(c, size) == expected);
    }
    std::vector<std::vector<std::size_t>> all;
    for (std::size_t size = 2; size <= n; ++size)
      for (const auto& s : subsets(n, size))
        if (monochromatic(c, s)) all.push_back(s);
    std::sort(all.begin(), all.end());
    CHECK(homogeneous_subsets(c) == all);
  }
}

TEST_CASE("pigeonhole extraction") {
  const auto r = pigeonhole_extract({0, 1, 0, 0}, 2);
  CHECK(r.colour == 0);
  CHECK(r.indices == std::vector<std::size_t>{0, 2, 3});
  const auto tie = pigeonhole_extract({0, 1}, 2);
  CHECK(tie.colour == 0);
  CHECK(tie.indices == std::vector<std::size_t>{0});
  const auto empty = pigeonhole_extract({}, 1);
  CHECK(empty.colour == 0);
  CHECK(empty.indices.empty());
  CHECK_THROWS_AS(pigeonhole_extract({0, 3}, 2), DomainError);
  CHECK_THROWS_AS(pigeonhole_extract({}, 0), DomainError);
}

TEST_CASE("pigeonhole order") {
  const auto a = pigeonhole_order({1, 0}, 2);
  CHECK(a.alpha_less(1, 0));
  CHECK_FALSE(a.alpha_less(0, 1));
  CHECK(a.seq == std::vector<std::pair<std::uint32_t, std::size_t>>{{0, 0}, {1, 1}});

  const auto b = pigeonhole_order({0, 0, 0}, 1);
  CHECK(b.ascending == std::vector<std::size_t>{2, 1, 0});
  CHECK(b.seq == std::vector<std::pair<std::uint32_t, std::size_t>>{{0, 0}, {0, 1}, {0, 2}});

  const auto e = pigeonhole_order({}, 3);
  CHECK(e.ascending.empty());
  CHECK(e.seq.empty());

  CHECK_THROWS_AS(pigeonhole_order({0, 2}, 2), DomainError);
}

TEST_CASE("text forms") {
  const auto c = parse_colouring("(0,1):1, (0,2):0 (1,2):1");
  CHECK(c.length() == 3);
  CHECK(c.at(0, 2) == 0);
  CHECK(to_string(c) == "(0,1):1 (0,2):0 (1,2):1");
  CHECK(to_string(parse_colouring(to_string(c))) == to_string(c));
  CHECK_THROWS_AS(parse_colouring("(0,1):1 (1,2):0"), ParseError);  // (0,2) missing
  CHECK_THROWS_AS(parse_colouring("(1,0):1"), ParseError);
  CHECK_THROWS_AS(parse_colouring("(0,1)1"), ParseError);

  const FiniteQO q({"a", "b"}, {{true, false}, {false, true}});
  CHECK(parse_tuples("(a,b),(b,a)", q) == std::vector<Tuple>{{0, 1}, {1, 0}});
  CHECK(parse_tuples("", q).empty());
  CHECK_THROWS_AS(parse_tuples("(a,c)", q), ParseError);
  CHECK_THROWS_AS(parse_tuples("(a,b", q), ParseError);

  CHECK(parse_int_list("3, 1,4") == std::vector<std::uint32_t>{3, 1, 4});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_int_list("-1"), ParseError);
}
