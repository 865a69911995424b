#include "ordnot/ramsey.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <omp.h>

#include "ordnot/error.hpp"

namespace ordnot {

Colouring::Colouring(std::size_t length, std::uint32_t colours)
    : length_(length), colours_(colours), values_(length < 2 ? 0 : length * (length - 1) / 2, 0) {}

std::size_t Colouring::slot(std::size_t i, std::size_t j) const {
  if (!(i < j && j < length_))
    throw DomainError("colouring index pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside the domain");
  // Row-major upper triangle.
  return i * (2 * length_ - i - 1) / 2 + (j - i - 1);
}

std::uint32_t Colouring::at(std::size_t i, std::size_t j) const { return values_[slot(i, j)]; }

void Colouring::set(std::size_t i, std::size_t j, std::uint32_t colour) {
  if (colour >= colours_) throw DomainError("colour " + std::to_string(colour) + " out of range");
  values_[slot(i, j)] = colour;
}

bool product_le(const Tuple& a, const Tuple& b, const FiniteQO& q) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!q.le(a[k], b[k])) return false;
  return true;
}

Colouring colour_bad_product_seq(const std::vector<Tuple>& seq, const FiniteQO& q, std::size_t n) {
  if (n == 0) throw DomainError("product arity must be >= 1");
  for (const auto& t : seq) {
    if (t.size() != n) throw DomainError("tuple arity differs from n = " + std::to_string(n));
    for (Index e : t)
      if (e >= q.size()) throw DomainError("tuple entry outside the carrier");
  }
  Colouring c(seq.size(), static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      std::optional<std::uint32_t> colour;
      for (std::uint32_t k = 0; k < n && !colour; ++k)
        if (!q.le(seq[i][k], seq[j][k])) colour = k;
      if (!colour)
        throw DomainError("sequence is not bad: (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is a good pair");
      c.set(i, j, *colour);
    }
  return c;
}

namespace {

bool fits(const Colouring& c, const std::vector<std::size_t>& set, std::size_t next, std::uint32_t colour) {
  for (auto i : set)
    if (c.at(i, next) != colour) return false;
  return true;
}

// First completion (lexicographic) of `set` to `size` indices.
bool search(const Colouring& c, std::vector<std::size_t>& set, std::size_t size,
            std::optional<std::uint32_t> colour) {
  if (set.size() == size) return true;
  for (std::size_t next = set.back() + 1; next < c.length(); ++next) {
    if (c.length() - next < size - set.size()) break;
    const std::uint32_t col = colour ? *colour : c.at(set.front(), next);
    if (!fits(c, set, next, col)) continue;
    set.push_back(next);
    if (search(c, set, size, col)) return true;
    set.pop_back();
  }
  return false;
}

void collect(const Colouring& c, std::vector<std::size_t>& set, std::optional<std::uint32_t> colour,
             std::vector<std::vector<std::size_t>>& out) {
  if (set.size() >= 2) out.push_back(set);
  for (std::size_t next = set.back() + 1; next < c.length(); ++next) {
    const std::uint32_t col = colour ? *colour : c.at(set.front(), next);
    if (!fits(c, set, next, col)) continue;
    set.push_back(next);
    collect(c, set, col, out);
    set.pop_back();
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> homogeneous_subset(const Colouring& c, std::size_t size) {
  if (size < 2) throw DomainError("homogeneous_subset needs size >= 2");
  if (size > c.length()) return std::nullopt;
  // Branches by first index; the smallest successful branch wins.
  const std::size_t branches = c.length() - size + 1;
  std::vector<std::optional<std::vector<std::size_t>>> found(branches);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t first = 0; first < branches; ++first) {
    std::vector<std::size_t> set{first};
    if (search(c, set, size, std::nullopt)) found[first] = std::move(set);
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> homogeneous_subsets(const Colouring& c) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = 0; first < c.length(); ++first) {
    std::vector<std::size_t> set{first};
    collect(c, set, std::nullopt, out);
  }
  return out;
}

PigeonholeResult pigeonhole_extract(const std::vector<std::uint32_t>& seq, std::uint32_t k) {
  if (k == 0) throw DomainError("pigeonhole_extract needs k >= 1");
  std::vector<std::size_t> counts(k, 0);
  for (auto v : seq) {
    if (v >= k) throw DomainError("entry " + std::to_string(v) + " is not below k = " + std::to_string(k));
    ++counts[v];
  }
  PigeonholeResult out;
  out.colour = static_cast<std::uint32_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == out.colour) out.indices.push_back(i);
  return out;
}

PigeonholeOrder pigeonhole_order(const std::vector<std::uint32_t>& prefix, std::uint32_t m) {
  for (auto v : prefix)
    if (v >= m) throw DomainError("entry " + std::to_string(v) + " is not below m = " + std::to_string(m));
  const std::size_t len = prefix.size();
  PigeonholeOrder out;
  out.ascending.resize(len);
  for (std::size_t i = 0; i < len; ++i) out.ascending[i] = i;
  std::sort(out.ascending.begin(), out.ascending.end(), [&](std::size_t i, std::size_t j) {
    if (prefix[i] != prefix[j]) return prefix[i] < prefix[j];
    return i > j;
  });
  out.rank.resize(len);
  for (std::size_t r = 0; r < len; ++r) out.rank[out.ascending[r]] = r;
  for (std::size_t i = 0; i < len; ++i) out.seq.emplace_back(m - 1 - prefix[i], i);

  // Postconditions, checked against the defining formula rather than ranks.
  auto defined_less = [&](std::size_t i, std::size_t j) {
    return prefix[i] < prefix[j] || (prefix[i] == prefix[j] && i > j);
  };
  for (std::size_t i = 0; i < len; ++i) {
    if (defined_less(i, i)) throw std::logic_error("alpha is not irreflexive");
    for (std::size_t j = 0; j < len; ++j) {
      if (i != j && defined_less(i, j) == defined_less(j, i))
        throw std::logic_error("alpha is not total and asymmetric");
      if (defined_less(i, j) != out.alpha_less(i, j)) throw std::logic_error("alpha ranks disagree");
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      const auto [ki, ei] = out.seq[i];
      const auto [kj, ej] = out.seq[j];
      const bool alpha_le = ei == ej || defined_less(ei, ej);
      if (ki <= kj && alpha_le) throw std::logic_error("constructed sequence has a good pair");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const Colouring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.length(); ++i)
    for (std::size_t j = i + 1; j < c.length(); ++j) {
      if (!out.empty()) out += ' ';
      out += "(" + std::to_string(i) + "," + std::to_string(j) + "):" + std::to_string(c.at(i, j));
    }
  return out;
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::string what) : text_(text), what_(std::move(what)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(what_ + ": " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint32_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }
  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ',' && text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected label");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::string what_;
  std::size_t pos_ = 0;
};

}  // namespace

Colouring parse_colouring(std::string_view text) {
  Scanner sc(text, "colouring");
  struct Entry {
    std::size_t i, j;
    std::uint32_t k;
  };
  std::vector<Entry> entries;
  while (!sc.done()) {
    sc.expect('(');
    const auto i = sc.integer();
    sc.expect(',');
    const auto j = sc.integer();
    sc.expect(')');
    sc.expect(':');
    const auto k = sc.integer();
    if (i >= j) sc.fail("pairs must satisfy i < j");
    entries.push_back({i, j, k});
    sc.accept(',');
  }
  std::size_t length = 0;
  std::uint32_t colours = 1;
  for (const auto& e : entries) {
    length = std::max(length, e.j + 1);
    colours = std::max(colours, e.k + 1);
  }
  Colouring c(length, colours);
  std::vector<bool> seen(length < 2 ? 0 : length * (length - 1) / 2, false);
  for (const auto& e : entries) {
    const std::size_t s = e.i * (2 * length - e.i - 1) / 2 + (e.j - e.i - 1);
    if (seen[s]) throw DomainError("colouring assigns (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") twice");
    seen[s] = true;
    c.set(e.i, e.j, e.k);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ParseError("colouring is not total on its domain");
  return c;
}

std::vector<Tuple> parse_tuples(std::string_view text, const FiniteQO& q) {
  Scanner sc(text, "tuples");
  std::vector<Tuple> out;
  while (!sc.done()) {
    sc.expect('(');
    Tuple t;
    do {
      const auto name = sc.word();
      auto idx = q.find(name);
      if (!idx) sc.fail("unknown label '" + name + "'");
      t.push_back(*idx);
    } while (sc.accept(','));
    sc.expect(')');
    out.push_back(std::move(t));
    sc.accept(',');
  }
  return out;
}

std::vector<std::uint32_t> parse_int_list(std::string_view text) {
  Scanner sc(text, "integer list");
  std::vector<std::uint32_t> out;
  while (!sc.done()) {
    out.push_back(sc.integer());
    if (!sc.done()) sc.expect(',');
  }
  return out;
}

}  // namespace ordnot
