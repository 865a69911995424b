#include "ordnot/wop.hpp"

#include "ordnot/error.hpp"

namespace ordnot {

Ordinal gamma_plus(const Ordinal& a) {
  if (a.is_zero()) return {};
  return omega_power(add(a.leading_exponent(), Ordinal::natural(1)));
}

Ordinal gamma_times(const Ordinal& a) {
  if (a.is_zero()) return {};
  if (a.is_finite()) return a.finite_value() == 1 ? a : Ordinal::omega();
  return omega_power(mul(a.leading_exponent(), Ordinal::omega()));
}

Ordinal pow_n(const Ordinal& a, Natural n) {
  // Square-and-multiply; ordinal multiplication is associative, so
  // regrouping the factors of a*a*...*a is sound.
  Ordinal result = Ordinal::natural(1);
  Ordinal base = a;
  while (n > 0) {
    if (bit_test(n, 0)) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Natural approx_index(const Ordinal& b, const Ordinal& a) {
  if (a < Ordinal::natural(2)) throw DomainError("approx_index: base must be >= 2");
  if (b >= gamma_times(a)) throw DomainError("approx_index: argument is not below a^w");
  // a^n is strictly increasing in n, so gallop to an upper bound and bisect.
  Natural lo = 0;
  Natural hi = 1;
  while (!(b < pow_n(a, hi))) {
    lo = hi;
    hi *= 2;
  }
  // Invariant: b >= a^lo (or lo = 0), b < a^hi.
  while (hi - lo > 1) {
    const Natural mid = (lo + hi) / 2;
    if (b < pow_n(a, mid))
      hi = mid;
    else
      lo = mid;
  }
  return b < pow_n(a, lo) ? lo : hi;
}

}  // namespace ordnot
