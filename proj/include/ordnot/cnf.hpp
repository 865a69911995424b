#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is an immutable handle onto a canonical term list
//   w^e1*c1 + ... + w^ek*ck,   e1 > ... > ek,  ci >= 1,
// so structural equality coincides with ordinal equality. Every public
// constructor either builds a canonical list or rejects its input.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordnot {

using Natural = boost::multiprecision::cpp_int;

struct CnfTerm;

class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal natural(const Natural& n);
  static Ordinal natural(std::uint64_t n) { return natural(Natural(n)); }
  static Ordinal omega();

  // Validates canonicity (strictly decreasing exponents, coefficients >= 1);
  // throws DomainError otherwise.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  std::span<const CnfTerm> terms() const;
  bool is_zero() const { return !terms_ || terms_->empty(); }
  bool is_finite() const;
  bool is_successor() const;
  // Leading exponent; zero for the ordinal 0.
  const Ordinal& leading_exponent() const;
  // The value as a natural number; precondition is_finite().
  Natural finite_value() const;
  // Nesting depth of exponents: 0 for finite ordinals, 1 for w*k+n, ...
  std::size_t height() const;

  friend std::strong_ordering compare_cnf(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return compare_cnf(a, b);
  }
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return compare_cnf(a, b) == std::strong_ordering::equal;
  }

 private:
  explicit Ordinal(std::vector<CnfTerm> canonical);
  friend class OrdinalBuilder;

  std::shared_ptr<const std::vector<CnfTerm>> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  Natural coefficient;
};

std::strong_ordering compare_cnf(const Ordinal& a, const Ordinal& b);

// Ordinal arithmetic.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);

// Hessenberg natural sum and product.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

Ordinal omega_power(const Ordinal& a);

// w_1 = w, w_{n+1} = w^{w_n}. Throws DomainError for n == 0.
Ordinal omega_tower(std::uint64_t n);

// Text form: `0`, `w`, `w^<atom>`, `w^<atom>*<int>`, integers, sums joined
// by ` + `. An exponent prints bare when it is a natural number or `w`, and
// parenthesized otherwise, e.g. `w^(w^w)*2 + w + 3`.
std::string to_string(const Ordinal& a);

// Accepts the printed grammar plus parentheses around any summand; summands
// are combined by ordinal addition. Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

}  // namespace ordnot
