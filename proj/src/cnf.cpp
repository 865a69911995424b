#include "ordnot/cnf.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "ordnot/error.hpp"

namespace ordnot {

class OrdinalBuilder {
 public:
  // Caller guarantees canonicity.
  static Ordinal unchecked(std::vector<CnfTerm> terms) { return Ordinal(std::move(terms)); }
};

namespace {

const Ordinal& zero_ordinal() {
  static const Ordinal z;
  return z;
}

const Ordinal& one_ordinal() {
  static const Ordinal one = Ordinal::natural(1);
  return one;
}

std::strong_ordering compare_natural(const Natural& a, const Natural& b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Multiset merge shared by nat_sum and the nat_prod accumulator.
struct ExponentGreater {
  bool operator()(const Ordinal& a, const Ordinal& b) const { return compare_cnf(a, b) > 0; }
};
using TermMap = std::map<Ordinal, Natural, ExponentGreater>;

Ordinal from_map(TermMap&& map) {
  std::vector<CnfTerm> out;
  out.reserve(map.size());
  for (auto& [e, c] : map) out.push_back({e, std::move(c)});
  return OrdinalBuilder::unchecked(std::move(out));
}

}  // namespace

Ordinal::Ordinal(std::vector<CnfTerm> canonical)
    : terms_(canonical.empty() ? nullptr
                               : std::make_shared<const std::vector<CnfTerm>>(std::move(canonical))) {}

Ordinal Ordinal::natural(const Natural& n) {
  if (n < 0) throw DomainError("negative natural number");
  if (n == 0) return {};
  return Ordinal(std::vector<CnfTerm>{{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return Ordinal(std::vector<CnfTerm>{{natural(1), 1}}); }

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("CNF coefficient must be >= 1");
    if (i > 0 && compare_cnf(terms[i - 1].exponent, terms[i].exponent) <= 0)
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  return Ordinal(std::move(terms));
}

std::span<const CnfTerm> Ordinal::terms() const {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

bool Ordinal::is_finite() const { return is_zero() || leading_exponent().is_zero(); }

bool Ordinal::is_successor() const { return !is_zero() && terms().back().exponent.is_zero(); }

const Ordinal& Ordinal::leading_exponent() const {
  if (is_zero()) return zero_ordinal();
  return terms().front().exponent;
}

Natural Ordinal::finite_value() const {
  if (!is_finite()) throw DomainError("ordinal is not finite");
  return is_zero() ? Natural(0) : terms().front().coefficient;
}

std::size_t Ordinal::height() const {
  if (is_finite()) return 0;
  return 1 + leading_exponent().height();
}

std::strong_ordering compare_cnf(const Ordinal& a, const Ordinal& b) {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  auto ta = a.terms();
  auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_cnf(ta[i].exponent, tb[i].exponent); c != 0) return c;
    if (auto c = compare_natural(ta[i].coefficient, tb[i].coefficient); c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<CnfTerm> out;
  Natural carry = 0;
  for (const auto& t : a.terms()) {
    auto c = compare_cnf(t.exponent, lead);
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) carry = t.coefficient;
      break;
    }
  }
  auto tb = b.terms();
  out.push_back({tb.front().exponent, tb.front().coefficient + carry});
  out.insert(out.end(), tb.begin() + 1, tb.end());
  return OrdinalBuilder::unchecked(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Ordinal& lead = a.leading_exponent();
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * k: scale the leading coefficient only.
      std::vector<CnfTerm> scaled(a.terms().begin(), a.terms().end());
      scaled.front().coefficient *= t.coefficient;
      piece = OrdinalBuilder::unchecked(std::move(scaled));
    } else {
      piece = OrdinalBuilder::unchecked({{add(lead, t.exponent), t.coefficient}});
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  TermMap merged;
  for (const auto& t : a.terms()) merged[t.exponent] += t.coefficient;
  for (const auto& t : b.terms()) merged[t.exponent] += t.coefficient;
  return from_map(std::move(merged));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  TermMap merged;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      merged[nat_sum(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
  return from_map(std::move(merged));
}

Ordinal omega_power(const Ordinal& a) { return OrdinalBuilder::unchecked({{a, 1}}); }

Ordinal omega_tower(std::uint64_t n) {
  if (n == 0) throw DomainError("omega_tower is indexed from 1");
  Ordinal out = Ordinal::omega();
  for (std::uint64_t i = 1; i < n; ++i) out = omega_power(out);
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void print_into(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != one_ordinal()) {
      out += '^';
      const bool bare = t.exponent.is_finite() || t.exponent == Ordinal::omega();
      if (!bare) out += '(';
      print_into(out, t.exponent);
      if (!bare) out += ')';
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal out = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("ordinal: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Natural integer() {
    if (!at_digit()) fail("expected integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  Natural coefficient() {
    Natural k = integer();
    if (k == 0) fail("coefficient must be >= 1");
    return k;
  }

  Ordinal sum() {
    Ordinal out = summand();
    while (accept('+')) out = add(out, summand());
    return out;
  }

  Ordinal atom() {
    if (at_digit()) return Ordinal::natural(integer());
    if (accept('w')) return Ordinal::omega();
    if (accept('(')) {
      Ordinal inner = sum();
      expect(')');
      return inner;
    }
    fail("expected exponent");
  }

  Ordinal summand() {
    if (at_digit()) return Ordinal::natural(integer());
    if (accept('(')) {
      Ordinal inner = sum();
      expect(')');
      return inner;
    }
    if (!accept('w')) fail("expected summand");
    Ordinal exponent = one_ordinal();
    if (accept('^')) exponent = atom();
    Natural k = 1;
    if (accept('*')) k = coefficient();
    return mul(omega_power(exponent), Ordinal::natural(k));
  }
};

}  // namespace

std::string to_string(const Ordinal& a) {
  std::string out;
  print_into(out, a);
  return out;
}

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

}  // namespace ordnot
