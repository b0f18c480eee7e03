#pragma once

#include <vector>

#include "mbh/int_util.hpp"
#include "mbh/weights.hpp"

namespace mbh {

/* C(n, floor(n/2)) */
Int middle_binom(long n);

/* C(n, floor((n-r)/2)) with floor toward minus infinity, so early terms can
   vanish (r = 1 gives 0, 1, 1, 3, 4, 10, ...). r = 0 recovers middle_binom. */
Int shifted_middle(long n, long r);

/* moments m_0..m_nmax of a weight scheme, by the interlocking path count
   recurrence */
std::vector<TPoly> moment_table(Family f, long nmax);
TPoly moment(Family f, long n);

/* same moment by exhaustive enumeration of weighted paths; exponential in n,
   only for cross-checking small cases */
TPoly brute_paths(Family f, long n);

/* the three polynomial sequences, as moments of their schemes */
TPoly a_poly(long n);
TPoly b_poly(long n);
TPoly c_poly(long n);

} // namespace mbh
