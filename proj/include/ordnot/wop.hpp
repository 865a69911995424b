#pragma once

// Evaluators for the ordinal functions X -> X*w and X -> X^w on CNF
// notations, finite powers, and the index n witnessing b < a^n below a^w.


#include "ordnot/cnf.hpp"

namespace ordnot {

// a * w. 0 -> 0, otherwise w^(e1 + 1) for leading exponent e1.
Ordinal gamma_plus(const Ordinal& a);

// a ^ w. 0 -> 0, 1 -> 1, finite a >= 2 -> w, otherwise w^(e1 * w).
Ordinal gamma_times(const Ordinal& a);

// a ^ n by repeated squaring; pow_n(a, 0) = 1.
Ordinal pow_n(const Ordinal& a, Natural n);

// Least n with b < a^n. Requires a >= 2 and b < a^w (DomainError otherwise).
Natural approx_index(const Ordinal& b, const Ordinal& a);

}  // namespace ordnot
