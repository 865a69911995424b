#pragma once

// Finite versions of the combinatorial steps behind closure of wqo's under
// finite products and n-fold unions: the colouring of a bad product
// sequence, homogeneous-set search, pigeonhole extraction, and the linear
// order built from a bounded sequence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordnot/qo.hpp"

namespace ordnot {

using Tuple = std::vector<Index>;

// Colours c(i, j) for 0 <= i < j < length.
class Colouring {
 public:
  Colouring(std::size_t length, std::uint32_t colours);

  std::size_t length() const { return length_; }
  std::uint32_t colours() const { return colours_; }
  std::uint32_t at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::uint32_t colour);

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  std::size_t length_;
  std::uint32_t colours_;
  std::vector<std::uint32_t> values_;
};

// Product order on Q^n.
bool product_le(const Tuple& a, const Tuple& b, const FiniteQO& q);

// c(i, j) = least k with seq[i][k] not <= seq[j][k]. The sequence must be
// bad in Q^n; a good pair is reported through DomainError.
Colouring colour_bad_product_seq(const std::vector<Tuple>& seq, const FiniteQO& q, std::size_t n);

// First index set of the given size (lexicographic order) whose pairs all
// share one colour.
std::optional<std::vector<std::size_t>> homogeneous_subset(const Colouring& c, std::size_t size);

// Every homogeneous index set of size >= 2, in lexicographic order.
std::vector<std::vector<std::size_t>> homogeneous_subsets(const Colouring& c);

struct PigeonholeResult {
  std::uint32_t colour = 0;
  std::vector<std::size_t> indices;
};

// A most frequent colour (smallest on ties) with all its positions.
PigeonholeResult pigeonhole_extract(const std::vector<std::uint32_t>& seq, std::uint32_t k);

struct PigeonholeOrder {
  // Indices listed in increasing alpha order; rank[i] is i's position there.
  std::vector<std::size_t> ascending;
  std::vector<std::size_t> rank;
  // seq[i] = (m - 1 - n_i, i).
  std::vector<std::pair<std::uint32_t, std::size_t>> seq;

  // i <_alpha j iff n_i < n_j, or n_i = n_j and i > j.
  bool alpha_less(std::size_t i, std::size_t j) const { return rank[i] < rank[j]; }
};

// Builds alpha and the sequence from a prefix with entries below m, and
// verifies alpha is a strict total order and seq has no good pair under the
// product order on m x alpha (std::logic_error if not).
PigeonholeOrder pigeonhole_order(const std::vector<std::uint32_t>& prefix, std::uint32_t m);

// (i,j):k triples separated by whitespace or commas.
std::string to_string(const Colouring& c);
Colouring parse_colouring(std::string_view text);
// `(a,b),(b,a)` with labels resolved in q.
std::vector<Tuple> parse_tuples(std::string_view text, const FiniteQO& q);
std::vector<std::uint32_t> parse_int_list(std::string_view text);

}  // namespace ordnot
