#include "mbh/genfun.hpp"

#include <algorithm>
#include <numeric>

#include "mbh/errors.hpp"

namespace mbh {

XPoly denom_expand(const DenomSpec& d) {
    XPoly acc(1);
    for (const auto& f : d) {
        if (f.exponent <= 0) throw BadArgument("factor exponent must be positive");
        if (f.sign != 1 && f.sign != -1) throw BadArgument("factor sign must be +-1");
        if (f.tpow < 0 || f.xpow <= 0) throw BadArgument("factor powers out of range");
        XPoly base = XPoly(1) + XPoly::monomial(TPoly::monomial(Rat(f.sign), f.tpow), f.xpow);
        acc = acc * poly_pow(base, f.exponent);
    }
    return acc;
}

long denom_xdegree(const DenomSpec& d) {
    long deg = 0;
    for (const auto& f : d) deg += f.xpow * f.exponent;
    return deg;
}

std::string denom_render(const DenomSpec& d) {
    if (d.empty()) return "1";
    std::string out;
    for (const auto& f : d) {
        std::string t = f.tpow == 0 ? "" : (f.tpow == 1 ? "t" : "t^" + std::to_string(f.tpow));
        std::string x = f.xpow == 1 ? "x" : "x^" + std::to_string(f.xpow);
        std::string term = t.empty() ? x : t + "*" + x;
        out += "(1" + std::string(f.sign > 0 ? "+" : "-") + term + ")";
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

GenfunResult genfun_structure(const std::vector<TPoly>& terms, const DenomSpec& denom,
                              long claimed_deg, long margin) {
    if (claimed_deg < 0 || margin < 0) throw BadArgument("negative degree or margin");
    XPoly den = denom_expand(denom);
    long m = static_cast<long>(terms.size());
    long need = claimed_deg + den.degree() + margin + 1;
    if (m < need)
        throw InsufficientTerms("have " + std::to_string(m) + " terms, need " +
                                std::to_string(need));
    GenfunResult out;
    out.checked_upto = m;
    std::vector<TPoly> num(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        TPoly acc;
        for (long j = 0; j <= std::min<long>(i, den.degree()); ++j)
            acc = acc + den.coeff(j) * terms[static_cast<size_t>(i - j)];
        num[static_cast<size_t>(i)] = std::move(acc);
    }
    out.pass = true;
    for (long i = claimed_deg + 1; i < m; ++i)
        if (!num[static_cast<size_t>(i)].is_zero()) {
            out.pass = false;
            out.bad_indices.push_back(i);
        }
    num.resize(static_cast<size_t>(claimed_deg) + 1);
    out.numerator = XPoly::from_coeffs(std::move(num));
    return out;
}

BlockResult block_decompose(const TPoly& p, const TPoly& denom_t,
                            const std::vector<long>& offsets, const std::vector<long>& widths) {
    if (offsets.size() != widths.size()) throw BadArgument("offset/width length mismatch");
    BlockResult out;
    TPoly cleared = p * denom_t;
    size_t nb = offsets.size();
    std::vector<size_t> order(nb);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return offsets[a] < offsets[b]; });
    for (size_t s = 0; s + 1 < nb; ++s) {
        size_t a = order[s], b = order[s + 1];
        if (offsets[a] + widths[a] >= offsets[b]) {
            out.status = BlockResult::Status::overlap;
            out.reason = "windows [" + std::to_string(offsets[a]) + "," +
                         std::to_string(offsets[a] + widths[a]) + "] and [" +
                         std::to_string(offsets[b]) + "," +
                         std::to_string(offsets[b] + widths[b]) + "] meet";
            return out;
        }
    }
    out.blocks.assign(nb, TPoly());
    for (long e = 0; e <= cleared.degree(); ++e) {
        const Rat& c = cleared.coeff(e);
        if (c.is_zero()) continue;
        bool placed = false;
        for (size_t j = 0; j < nb; ++j) {
            if (e >= offsets[j] && e <= offsets[j] + widths[j]) {
                out.blocks[j] = out.blocks[j] + TPoly::monomial(c, e - offsets[j]);
                placed = true;
                break;
            }
        }
        if (!placed) out.stray.push_back(e);
    }
    if (!out.stray.empty()) {
        out.status = BlockResult::Status::uncovered;
        out.reason = std::to_string(out.stray.size()) + " coefficients outside every window";
    }
    return out;
}

} // namespace mbh
