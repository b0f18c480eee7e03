#include "mbh/hankel.hpp"

#include <map>
#include <utility>

namespace mbh {

std::vector<Int> int_seq_table(long r, long upto) {
    std::vector<Int> v;
    for (long n = 0; n <= upto; ++n) v.push_back(shifted_middle(n, r));
    return v;
}

std::vector<TPoly> poly_seq_table(Family f, long upto) { return moment_table(f, upto); }

Int hankel_det_int(long r, long k, long n) {
    if (n == 0) return Int(1);
    auto seq = int_seq_table(r, k + 2 * n - 2);
    return det_bareiss(hankel_matrix(seq, k, n));
}

TPoly hankel_det_poly(Family f, long k, long n) {
    if (n == 0) return TPoly(1);
    auto seq = poly_seq_table(f, k + 2 * n - 2);
    return det_bareiss(hankel_matrix(seq, k, n));
}

namespace {

std::map<std::pair<long, long>, std::vector<Int>> g_int_tables;
std::map<std::pair<int, long>, std::vector<TPoly>> g_poly_tables;

std::vector<Int> build_int_table(long r, long k, long nmax) {
    std::vector<Int> out;
    out.push_back(Int(1));
    if (nmax == 0) return out;
    auto seq = int_seq_table(r, k + 2 * nmax - 2);
    for (long n = 1; n <= nmax; ++n)
        out.push_back(det_bareiss(hankel_matrix(seq, k, n)));
    return out;
}

std::vector<TPoly> build_poly_table(Family f, long k, long nmax) {
    std::vector<TPoly> out;
    out.push_back(TPoly(1));
    if (nmax == 0) return out;
    auto seq = poly_seq_table(f, k + 2 * nmax - 2);
    Mat<TPoly> m = hankel_matrix(seq, k, nmax);
    try {
        auto minors = leading_principal_minors(m);
        out.insert(out.end(), minors.begin(), minors.end());
    } catch (const ZeroPivot&) {
        for (long n = 1; n <= nmax; ++n)
            out.push_back(det_bareiss(hankel_matrix(seq, k, n)));
    }
    return out;
}

} // namespace

std::vector<Int> det_table_int(long r, long k, long nmax) {
    auto key = std::make_pair(r, k);
    auto it = g_int_tables.find(key);
    if (it == g_int_tables.end() || static_cast<long>(it->second.size()) <= nmax)
        it = g_int_tables.insert_or_assign(key, build_int_table(r, k, nmax)).first;
    return std::vector<Int>(it->second.begin(), it->second.begin() + nmax + 1);
}

std::vector<TPoly> det_table_poly(Family f, long k, long nmax) {
    auto key = std::make_pair(static_cast<int>(f), k);
    auto it = g_poly_tables.find(key);
    if (it == g_poly_tables.end() || static_cast<long>(it->second.size()) <= nmax)
        it = g_poly_tables.insert_or_assign(key, build_poly_table(f, k, nmax)).first;
    return std::vector<TPoly>(it->second.begin(), it->second.begin() + nmax + 1);
}

long norm_exponent(Family f, long n) {
    switch (f) {
        case Family::Mid: return 0;
        case Family::A: return choose2(n);
        case Family::B: return (n * n) / 4;
        case Family::C: return choose2(n);
    }
    throw BadArgument("bad family");
}

TPoly normalized_det(Family f, long k, long n) {
    return tpow_div(hankel_det_poly(f, k, n), norm_exponent(f, n));
}

std::vector<TPoly> normalized_table(Family f, long k, long nmax) {
    auto dets = det_table_poly(f, k, nmax);
    for (long n = 0; n <= nmax; ++n)
        dets[static_cast<size_t>(n)] =
            tpow_div(dets[static_cast<size_t>(n)], norm_exponent(f, n));
    return dets;
}

XPoly orthopoly(Family f, long n) {
    if (n < 0) throw BadArgument("negative degree");
    WeightSpec w = weights_for(f);
    const TPoly one(1);
    XPoly pm1 = XPoly(TPoly(1));
    if (n == 0) return pm1;
    XPoly p = XPoly::from_coeffs({-w.s(0), one});
    for (long k = 1; k < n; ++k) {
        XPoly lin = XPoly::from_coeffs({-w.s(k), one});
        XPoly next = lin * p - pm1.scaled(w.t(k - 1));
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

TPoly orthopoly_at0(Family f, long n) {
    if (n < 0) throw BadArgument("negative degree");
    WeightSpec w = weights_for(f);
    TPoly qm1(1);
    if (n == 0) return qm1;
    TPoly q = -w.s(0);
    for (long k = 1; k < n; ++k) {
        TPoly next = -(w.s(k) * q) - w.t(k - 1) * qm1;
        qm1 = std::move(q);
        q = std::move(next);
    }
    return q;
}

TPoly step_weight_product(Family f, long n) {
    WeightSpec w = weights_for(f);
    TPoly prod(1);
    for (long j = 0; j + 1 <= n - 1; ++j) {
        TPoly tj = w.t(j);
        for (long e = 0; e < n - 1 - j; ++e) prod *= tj;
    }
    return prod;
}

} // namespace mbh
