#pragma once

// Exhaustive pair/triple checkers behind the property suites.
//
// Each kernel exists twice: `serial::` is the plain reference loop and
// `omp::` distributes the outer loop with OpenMP. Both report the same
// counts and the same (lexicographically least) sample of violations,
// independent of thread count.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ordnot::kernels {

using Pair = std::pair<std::size_t, std::size_t>;

struct Violations {
  std::size_t checked = 0;
  std::size_t count = 0;
  std::vector<Pair> sample;  // least violating pairs, at most kSampleSize

  static constexpr std::size_t kSampleSize = 8;

  void record(std::size_t i, std::size_t j) {
    ++count;
    if (sample.size() < kSampleSize) sample.emplace_back(i, j);
  }
  void merge(Violations&& other) {
    checked += other.checked;
    count += other.count;
    sample.insert(sample.end(), other.sample.begin(), other.sample.end());
    std::sort(sample.begin(), sample.end());
    if (sample.size() > kSampleSize) sample.resize(kSampleSize);
  }
  bool ok() const { return count == 0; }
};

// Dense boolean matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return bits_[i * words_ + j / 64] >> (j % 64) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

// For distinct i, j exactly one of less(i, j), less(j, i); never less(i, i).
// Row i covers j >= i.
template <typename Less>
void trichotomy_row(std::size_t i, std::size_t n, Less& less, Violations& v) {
  ++v.checked;
  if (less(i, i)) v.record(i, i);
  for (std::size_t j = i + 1; j < n; ++j) {
    ++v.checked;
    if (less(i, j) == less(j, i)) v.record(i, j);
  }
}

// R(i, j) and R(j, k) imply R(i, k): every row j reachable from i must be a
// subset of row i. Counts violating triples.
inline void transitivity_row(const BitMatrix& r, std::size_t i, Violations& v) {
  const std::uint64_t* ri = r.row(i);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!r.get(i, j)) continue;
    const std::uint64_t* rj = r.row(j);
    for (std::size_t w = 0; w < r.words(); ++w) {
      v.checked += static_cast<std::size_t>(std::popcount(rj[w]));
      const std::uint64_t missing = rj[w] & ~ri[w];
      for (int k = std::popcount(missing); k > 0; --k) v.record(i, j);
    }
  }
}

}  // namespace detail

namespace serial {

template <typename Less>
Violations trichotomy(std::size_t n, Less less) {
  Violations v;
  for (std::size_t i = 0; i < n; ++i) detail::trichotomy_row(i, n, less, v);
  return v;
}

template <typename Pred>
BitMatrix relation_matrix(std::size_t n, Pred pred) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) m.set(i, j);
  return m;
}

inline Violations transitivity(const BitMatrix& r) {
  Violations v;
  for (std::size_t i = 0; i < r.size(); ++i) detail::transitivity_row(r, i, v);
  return v;
}

// Pairs (i, j) in [0, n)^2 where the two predicates disagree.
template <typename A, typename B>
Violations disagreements(std::size_t n, A a, B b) {
  Violations v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++v.checked;
      if (a(i, j) != b(i, j)) v.record(i, j);
    }
  return v;
}

}  // namespace serial

namespace omp {

template <typename Less>
Violations trichotomy(std::size_t n, Less less) {
  std::vector<Violations> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) detail::trichotomy_row(i, n, less, rows[i]);
  Violations v;
  for (auto& r : rows) v.merge(std::move(r));
  return v;
}

template <typename Pred>
BitMatrix relation_matrix(std::size_t n, Pred pred) {
  BitMatrix m(n);
  // Rows are word-aligned, so distinct rows never share a word.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) m.set(i, j);
  return m;
}

inline Violations transitivity(const BitMatrix& r) {
  std::vector<Violations> rows(r.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < r.size(); ++i) detail::transitivity_row(r, i, rows[i]);
  Violations v;
  for (auto& row : rows) v.merge(std::move(row));
  return v;
}

template <typename A, typename B>
Violations disagreements(std::size_t n, A a, B b) {
  std::vector<Violations> rows(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rows[i].checked;
      if (a(i, j) != b(i, j)) rows[i].record(i, j);
    }
  Violations v;
  for (auto& r : rows) v.merge(std::move(r));
  return v;
}

}  // namespace omp

}  // namespace ordnot::kernels
