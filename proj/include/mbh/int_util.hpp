#pragma once

#include <gmpxx.h>

#include <string>

#include "mbh/errors.hpp"

namespace mbh {

using Int = mpz_class;

/* binom(n, k) = C(n, k) for n >= 0, with C(n, k) = 0 outside 0 <= k <= n.
   Negative n is rejected; sign formulas that need generalized C(m, 2) use
   choose2 below instead. */
Int binom(long n, long k);

Int catalan(long n);

/* Floor division toward minus infinity, b > 0. */
long floor_div(long a, long b);

/* m(m-1)/2 for any integer m (generalized C(m, 2), used in sign exponents). */
long choose2(long m);

/* (-1)^e */
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

Int int_pow(const Int& base, unsigned long e);

/* Quotient a/b with the divisibility requirement checked; exact elimination
   steps must never round. */
Int divexact_checked(const Int& a, const Int& b);

inline bool is_zero(const Int& v) { return sgn(v) == 0; }

inline std::string render(const Int& v) { return v.get_str(); }

} // namespace mbh
