#pragma once

#include <string>
#include <vector>

#include "mbh/poly.hpp"

namespace mbh {

/* Denominator factor 1 + sign * t^tpow * x^xpow, raised to exponent. */
struct DenomFactor {
    int sign;       // +1 or -1
    long tpow;
    long xpow;
    long exponent;  // > 0
};

using DenomSpec = std::vector<DenomFactor>;

XPoly denom_expand(const DenomSpec& d);
long denom_xdegree(const DenomSpec& d);
std::string denom_render(const DenomSpec& d);

/* Multiplies the term list (read as a power series in x) by the expanded
   denominator and demands that every coefficient beyond claimed_deg vanish
   for as far as the supplied terms can certify. The terms must cover
   claimed_deg + x-degree(denominator) + margin + 1 coefficients. */
struct GenfunResult {
    bool pass = false;
    XPoly numerator;                  // prefix through claimed_deg
    std::vector<long> bad_indices;    // x-exponents with surviving tail terms
    long checked_upto = 0;            // tail verified for exponents < this
};

GenfunResult genfun_structure(const std::vector<TPoly>& terms, const DenomSpec& denom,
                              long claimed_deg, long margin);

/* Splits cleared = p * denom_t into windows [offset_j, offset_j + width_j].
   Raw window contents are returned unsigned; expectations about alternating
   signs belong to the caller. Overlapping windows make the split ambiguous
   and the result inconclusive rather than wrong. */
struct BlockResult {
    enum class Status { ok, overlap, uncovered };
    Status status = Status::ok;
    std::string reason;
    std::vector<TPoly> blocks;
    std::vector<long> stray;          // t-exponents outside every window
};

BlockResult block_decompose(const TPoly& p, const TPoly& denom_t,
                            const std::vector<long>& offsets, const std::vector<long>& widths);

} // namespace mbh
