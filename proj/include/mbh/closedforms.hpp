#pragma once

#include <vector>

#include "mbh/poly.hpp"
#include "mbh/series.hpp"

namespace mbh {

/* Product and determinant forms for the normalized integer Hankel values,
   all expanded over Rat in one variable (rendered as "x"). */

// prod_{j=1..k} ((j+x)/j)^min(j,k-j); r_0 = r_1 = 1
QXPoly r_poly(long k);

// the equivalent double product, i up to floor(k/2), j up to ceil(k/2)
QXPoly s_double_product(long k);

// r_{k-1} * prod_{j=floor((k+1)/2)}^{k-1} (x+j)/j
QXPoly r_via_ratio(long k);

// symbolic binomial-entry determinant of order floor((k-1)/2)+1
QXPoly r_via_det(long k);

// C(x+c, m) expanded in x
QXPoly binom_poly(long c, long m);

// prod_{j=1..a} prod_{i=1..b} (x+j-i); vanishes at integers 0..b-1
QXPoly v_ab(long a, long b);
Rat v_ab_value(long a, long b, long n);

/* b-fold application of x^(a-1) (d/dx)^a to the geometric series 1/(1-x).
   Each pass costs one term of validity, so the series is seeded with
   wanted + b + 2 terms. */
SeriesQ F_ab_series(long a, long b, long wanted);

/* Clears the (1-x)^(ab+1) pole of F_ab_series and strips the v_ab(b) x^(a-1)
   prefactor; the remainder must terminate at degree (a-1)(b-1) exactly. */
QXPoly G_extract(long a, long b, long wanted);

/* Numerator of the k-indexed determinant generating function: multiplies the
   series of normalized determinant values by (1-x)^(e) where e depends on the
   parity of m, and demands exact termination at the known degree. */
QXPoly A_extract(long m, long wanted);

// c_l x^(2l) -> (-1)^l c_l x^(2l); odd support is a construction bug
QXPoly ix_twist(const QXPoly& p);

struct BTriple {
    QXPoly b0;  // even combination, before the twist
    QXPoly b1;  // odd combination divided by x, before the twist
    QXPoly b;   // twist(b0) + x * twist(b1)
};

/* Numerator data for the odd-index integer determinant generating function
   over the (1+x^2) pole; b has degree 2k^2+1. */
BTriple B_polys(long k, long wanted);

// F_0 = 1, F_{-1} = 0, F_n = x F_{n-1} - F_{n-2}
QXPoly fib_poly(long n);

/* Descent polynomial over standard Young tableaux with b rows of length a:
   sum over tableaux of x^(des(T)-b+1), where des counts entries whose
   successor sits in a strictly lower row. */
QXPoly syt_descent_poly(long a, long b);

/* Single-sum binomial expression for the horizontally-weighted Motzkin
   moments. Disagrees with the defining DP at small n; retained purely as the
   target of an audit check. */
TPoly moment_binomial_sum(long n);

} // namespace mbh
