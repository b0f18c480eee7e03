#pragma once

#include <vector>

#include "mbh/matrix.hpp"
#include "mbh/sequences.hpp"

namespace mbh {

std::vector<Int> int_seq_table(long r, long upto);      // shifted_middle(n, r), n = 0..upto
std::vector<TPoly> poly_seq_table(Family f, long upto); // scheme moments

/* det of the n x n matrix with entries seq(k+i+j); n = 0 gives 1 */
Int hankel_det_int(long r, long k, long n);
TPoly hankel_det_poly(Family f, long k, long n);

/* all determinant sizes 0..nmax at a fixed offset k, cached per (r|family, k).
   The polynomial tables come from one pivotless elimination whose pivots are
   the leading principal minors; integer tables (which hit genuinely singular
   prefixes) are done per size with row pivoting. NOT thread safe: the harness
   runs checks sequentially and parallelizes inside the elimination kernels. */
std::vector<Int> det_table_int(long r, long k, long nmax);
std::vector<TPoly> det_table_poly(Family f, long k, long nmax);

/* t-adic valuation each scheme's determinants are divided by to normalize */
long norm_exponent(Family f, long n);

TPoly normalized_det(Family f, long k, long n); // NotDivisible when the valuation claim fails
std::vector<TPoly> normalized_table(Family f, long k, long nmax);

/* monic orthogonal polynomial of the scheme, degree n, coefficients in t */
XPoly orthopoly(Family f, long n);
TPoly orthopoly_at0(Family f, long n);

/* prod over down-step weights t(j)^(n-1-j), j = 0..n-2: the closed value of
   the offset-0 moment determinant of size n */
TPoly step_weight_product(Family f, long n);

} // namespace mbh
