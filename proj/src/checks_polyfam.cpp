#include "mbh/checks.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mbh/genfun.hpp"
#include "mbh/hankel.hpp"
#include "mbh/matrix.hpp"
#include "mbh/sequences.hpp"
#include "mbh/series.hpp"

namespace mbh {

namespace {

constexpr long kMargin = 5;

TPoly t_power(long e) { return TPoly::monomial(Rat(1), e); }
TPoly one_minus_t_pow(long e) { return poly_pow(tpoly_from({1, -1}), e); }
TPoly one_minus_t2_pow(long e) { return poly_pow(tpoly_from({1, 0, -1}), e); }

TPoly geom_sum(long n) {
    std::vector<Rat> cs(static_cast<size_t>(n) + 1, Rat(1));
    return TPoly::from_coeffs(std::move(cs));
}

Rat binom(long n, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
    return r;
}

QXPoly at_t1(const XPoly& p) {
    std::vector<Rat> cs;
    for (long i = 0; i <= p.degree(); ++i) cs.push_back(p.coeff(i).eval(Rat(1)));
    return QXPoly::from_coeffs(std::move(cs));
}

XPoly xp(std::vector<TPoly> cs) { return XPoly::from_coeffs(std::move(cs)); }

std::string at_n(long n) { return "n = " + std::to_string(n); }
std::string at_kn(long k, long n) {
    return "k = " + std::to_string(k) + ", n = " + std::to_string(n);
}
std::string at_mn(long m, long n) {
    return "index " + std::to_string(m) + ", n = " + std::to_string(n);
}

/* ------------------------------------------------------------------ */
/*  middle-family t-determinants (sec4)                                */
/* ------------------------------------------------------------------ */

TPoly d3_even_sum(long m) {
    // sum over j <= 2m of (2m+1-j) t^j, shifted by t^m, sign (-1)^m
    std::vector<Rat> cs;
    for (long j = 0; j <= 2 * m; ++j) cs.push_back(Rat(2 * m + 1 - j));
    return TPoly::from_coeffs(std::move(cs)).shifted_up(m).scaled(Rat(parity_sign(m)));
}

TPoly d3_odd_sum(long m) {
    std::vector<Rat> cs;
    for (long j = 0; j <= 2 * m + 1; ++j) cs.push_back(Rat(j + 1));
    return TPoly::from_coeffs(std::move(cs)).scaled(Rat(parity_sign(m)));
}

CheckReport check_b_closedforms(const RunConfig& cfg) {
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec4.closedforms", "n <= " + std::to_string(nmax));
    auto d2 = normalized_table(Family::B, 2, nmax);
    auto d3 = normalized_table(Family::B, 3, nmax);
    auto d4 = normalized_table(Family::B, 4, nmax);
    for (long n = 0; n <= nmax; ++n) {
        c.expect_eq("index 2, " + at_n(n), geom_sum(n), d2[static_cast<size_t>(n)]);
        const TPoly& v3 = d3[static_cast<size_t>(n)];
        if (n % 2 == 0) {
            long m = n / 2;
            c.expect_eq("index 3, " + at_n(n), d3_even_sum(m), v3);
            // cleared numerator (2m+1) - (2m+2) t + t^(2m+2), carried by t^m
            TPoly num = TPoly(2 * m + 1) - t_power(1).scaled(Rat(2 * m + 2)) + t_power(2 * m + 2);
            c.expect_eq("index 3 cleared numerator, " + at_n(n), num.shifted_up(m),
                        v3.scaled(Rat(parity_sign(m))) * one_minus_t_pow(2));
        } else {
            long m = (n - 1) / 2;
            c.expect_eq("index 3, " + at_n(n), d3_odd_sum(m), v3);
            // cleared numerator 1 - (2m+3) t^(2m+2) + (2m+2) t^(2m+3)
            TPoly num = TPoly(1) - t_power(2 * m + 2).scaled(Rat(2 * m + 3)) +
                        t_power(2 * m + 3).scaled(Rat(2 * m + 2));
            c.expect_eq("index 3 cleared numerator, " + at_n(n), num,
                        v3.scaled(Rat(parity_sign(m))) * one_minus_t_pow(2));
        }
        // index 4: central binomial-coefficient sum
        TPoly w4 = t_power(n).scaled(binom(n + 3, 3));
        for (long j = 0; j < n; ++j) {
            Rat b = binom(j + 3, 3);
            w4 += t_power(j).scaled(b) + t_power(2 * n - j).scaled(b);
        }
        c.expect_eq("index 4, " + at_n(n), w4, d4[static_cast<size_t>(n)]);
        Rat sq = Rat(n + 2) * Rat(n + 2);
        TPoly num4 = TPoly(1) - t_power(n + 1).scaled(sq) +
                     t_power(n + 2).scaled(Rat(2) * Rat(n * n + 4 * n + 3)) -
                     t_power(n + 3).scaled(sq) + t_power(2 * n + 4);
        c.expect_eq("index 4 cleared numerator, " + at_n(n), num4,
                    d4[static_cast<size_t>(n)] * one_minus_t_pow(4));
    }
    // listed rows for indices 5 and 6
    long small = std::min<long>(3, nmax);
    auto d5 = normalized_table(Family::B, 5, small);
    auto d6 = normalized_table(Family::B, 6, small);
    const std::vector<TPoly> rows5 = {
        tpoly_from({1}),
        tpoly_from({1, 6, 3}),
        tpoly_from({0, -6, -16, -21, -6, -1}),
        tpoly_from({-1, -6, -21, -56, -51, -30, -10})};
    const std::vector<TPoly> rows6 = {
        tpoly_from({1}),
        tpoly_from({1, 9, 9, 1}),
        tpoly_from({1, 9, 45, 65, 45, 9, 1}),
        tpoly_from({1, 9, 45, 165, 270, 270, 165, 45, 9, 1})};
    for (long n = 0; n <= small; ++n) {
        c.expect_eq("listed row, index 5, " + at_n(n), rows5[static_cast<size_t>(n)],
                    d5[static_cast<size_t>(n)]);
        c.expect_eq("listed row, index 6, " + at_n(n), rows6[static_cast<size_t>(n)],
                    d6[static_cast<size_t>(n)]);
    }
    return c.finish();
}

/* The displayed rational form of the odd-argument index-3 value has its two
   trailing exponents off by one; this audit records the printed numerator
   against the computed one. */
CheckReport check_eq52_audit(const RunConfig& cfg) {
    const long mmax = std::min<long>(4, (std::min(cfg.nmax(10), cfg.tpoly_cap) - 1) / 2);
    Checker c("sec4.eq52_audit", "m <= " + std::to_string(mmax));
    auto d3 = normalized_table(Family::B, 3, 2 * mmax + 1);
    for (long m = 0; m <= mmax; ++m) {
        TPoly actual = d3[static_cast<size_t>(2 * m + 1)].scaled(Rat(parity_sign(m))) *
                       one_minus_t_pow(2);
        TPoly printed = TPoly(1) - t_power(2 * m + 3).scaled(Rat(2 * m + 3)) +
                        t_power(2 * m + 4).scaled(Rat(2 * m + 2));
        if (printed == actual) {
            c.note("printed odd-argument numerator matches at m = " + std::to_string(m));
        } else {
            c.finding("printed odd-argument cleared numerator, m = " + std::to_string(m),
                      render(printed), render(actual));
        }
    }
    c.note("the printed trailing exponents read one too high; shifting both down by one "
           "reproduces the computed numerator, as asserted in sec4.closedforms");
    return c.finish(true);
}

CheckReport check_conj8(const RunConfig& cfg) {
    const long kmax = cfg.kmax(3);
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec4.conj8", "k <= " + std::to_string(kmax) + ", n <= " + std::to_string(nmax));
    for (long k = 1; k <= kmax; ++k) {
        auto dk = normalized_table(Family::B, 2 * k, nmax);
        TPoly den = one_minus_t_pow(k * k);
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_kn(k, n);
            const TPoly& r = dk[static_cast<size_t>(n)];
            c.expect_eq("degree " + where, k * n, r.degree());
            c.expect_true("palindromic " + where, is_palindromic(r));
            c.expect_true("unimodal " + where, is_unimodal(r));
            c.expect_true("positive coefficients " + where, coeffs_positive(r));
            std::vector<long> offsets, widths;
            for (long j = 0; j <= k; ++j) {
                offsets.push_back(j * (n + j));
                widths.push_back(2 * j * (k - j));
            }
            auto br = block_decompose(r, den, offsets, widths);
            if (br.status == BlockResult::Status::overlap) {
                c.note("windows overlap at " + where + "; cell skipped");
                continue;
            }
            c.expect_true("window split " + where,
                          br.status == BlockResult::Status::ok && br.stray.empty(), br.reason);
            if (br.status != BlockResult::Status::ok || !br.stray.empty()) continue;
            std::vector<TPoly> cj;
            for (long j = 0; j <= k; ++j)
                cj.push_back(br.blocks[static_cast<size_t>(j)].scaled(Rat(parity_sign(j))));
            for (long j = 0; j <= k; ++j)
                c.expect_eq("block degree j = " + std::to_string(j) + ", " + where,
                            2 * j * (k - j), cj[static_cast<size_t>(j)].degree());
            for (long j = 0; 2 * j <= k; ++j)
                c.expect_eq("block reversal j = " + std::to_string(j) + ", " + where,
                            reverse_poly(cj[static_cast<size_t>(j)], 2 * j * (k - j)),
                            cj[static_cast<size_t>(k - j)]);
        }
    }
    return c.finish();
}

CheckReport check_conj9(const RunConfig& cfg) {
    const long kmax = cfg.kmax(3);
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec4.conj9", "k <= " + std::to_string(kmax) + ", n <= " + std::to_string(nmax));
    for (long k = 1; k <= kmax; ++k) {
        const long m = 2 * k + 1;
        auto dm = normalized_table(Family::B, m, nmax);
        TPoly den = one_minus_t_pow(k * k + k);
        for (long arg = 0; arg <= nmax; ++arg) {
            const bool even = (arg % 2 == 0);
            const long a = even ? arg / 2 : (arg - 1) / 2;
            const std::string where =
                "k = " + std::to_string(k) + ", argument " + std::to_string(arg);
            TPoly r;
            try {
                r = even ? tpow_div(dm[static_cast<size_t>(arg)], a).scaled(Rat(parity_sign(a)))
                         : dm[static_cast<size_t>(arg)].scaled(Rat(parity_sign(a)));
            } catch (const NotDivisible& e) {
                c.expect_true("t-power factor " + where, false, e.what());
                continue;
            }
            c.expect_eq("degree " + where, k * arg, r.degree());
            c.expect_true("positive coefficients " + where, coeffs_positive(r));
            std::vector<long> offsets, widths;
            for (long j = 0; j <= k; ++j) {
                offsets.push_back(even ? j * (2 * a + j + 1) : j * (2 * a + 1 + j));
                widths.push_back(even ? (2 * j + 1) * (k - j) : (2 * k - 2 * j + 1) * j);
            }
            auto br = block_decompose(r, den, offsets, widths);
            if (br.status == BlockResult::Status::overlap) {
                c.note("windows overlap at " + where + "; cell skipped");
            } else {
                c.expect_true("window split " + where,
                              br.status == BlockResult::Status::ok && br.stray.empty(),
                              br.reason);
                if (br.status == BlockResult::Status::ok && br.stray.empty()) {
                    for (long j = 0; j <= k; ++j)
                        c.expect_eq("block degree j = " + std::to_string(j) + ", " + where,
                                    widths[static_cast<size_t>(j)],
                                    br.blocks[static_cast<size_t>(j)].degree());
                    if (k == 2 && even) {
                        TPoly c0 = TPoly(Rat(a + 1) * Rat(2 * a + 1)) -
                                   t_power(1).scaled(Rat(2) * Rat(a + 1) * Rat(2 * a + 3)) +
                                   t_power(2).scaled(Rat(a + 2) * Rat(2 * a + 3));
                        TPoly c1 =
                            TPoly(Rat(a + 1) * Rat(2 * a + 3) * Rat(2 * a + 3)) -
                            t_power(1).scaled(Rat(2) * Rat(a + 1) * Rat(a + 2) * Rat(6 * a + 5)) +
                            t_power(2).scaled(Rat(2 * a + 1) * Rat(2 * a + 3) * Rat(3 * a + 5)) -
                            t_power(3).scaled(Rat(2) * Rat(a + 1) * Rat(a + 1) * Rat(2 * a + 3));
                        c.expect_eq("listed block j = 0, " + where, c0, br.blocks[0]);
                        c.expect_eq("listed block j = 1, " + where, c1, br.blocks[1]);
                        c.expect_eq("listed block j = 2, " + where, TPoly(1), br.blocks[2]);
                    }
                }
            }
            // the listed k = 2 composition holds even where windows overlap
            if (k == 2 && even) {
                TPoly c0 = TPoly(Rat(a + 1) * Rat(2 * a + 1)) -
                           t_power(1).scaled(Rat(2) * Rat(a + 1) * Rat(2 * a + 3)) +
                           t_power(2).scaled(Rat(a + 2) * Rat(2 * a + 3));
                TPoly c1 = TPoly(Rat(a + 1) * Rat(2 * a + 3) * Rat(2 * a + 3)) -
                           t_power(1).scaled(Rat(2) * Rat(a + 1) * Rat(a + 2) * Rat(6 * a + 5)) +
                           t_power(2).scaled(Rat(2 * a + 1) * Rat(2 * a + 3) * Rat(3 * a + 5)) -
                           t_power(3).scaled(Rat(2) * Rat(a + 1) * Rat(a + 1) * Rat(2 * a + 3));
                TPoly sum = c0 + c1.shifted_up(2 * a + 2) + t_power(4 * a + 6);
                c.expect_eq("listed composition " + where, sum, r * den);
            }
        }
    }
    c.note("the explicit index-5 display labels its blocks with a leading 1 and prints the "
           "last offset as 2n+6; the offsets that reproduce its own instances are j(2n+j+1), "
           "so the last offset reads 4n+6");
    return c.finish();
}

/* generating function of the even-index normalized values */
CheckReport check_conj10(const RunConfig& cfg) {
    const long kmax = cfg.kmax(2);
    Checker c("sec4.conj10", "k <= " + std::to_string(std::max<long>(kmax, 3)));
    std::vector<long> ks;
    for (long k = 0; k <= kmax; ++k) ks.push_back(k);
    if (kmax < 3) ks.push_back(3);  // the listed degree-6 numerator is always verified
    for (long k : ks) {
        const std::string kk = "k = " + std::to_string(k);
        const long claimed = (k >= 1) ? (k - 1) * (k * k + k - 3) / 3 : 0;
        DenomSpec den;
        for (long j = 0; j <= k; ++j)
            den.push_back(DenomFactor{-1, j, 1, 1 + 2 * j * (k - j)});
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": needs a table of " + std::to_string(need) +
                   " determinants, cap " + std::to_string(cfg.tpoly_cap));
            continue;
        }
        auto terms = normalized_table(Family::B, 2 * k, need - 1);
        auto res = genfun_structure(terms, den, claimed, kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        c.expect_eq("numerator degree " + kk, claimed, res.numerator.degree());
        if (k <= 1) c.expect_eq("numerator " + kk, xp({TPoly(1)}), res.numerator);
        if (k == 2) c.expect_eq("numerator " + kk, xp({TPoly(1), t_power(1)}), res.numerator);
        if (k == 3) {
            XPoly a6 = xp({TPoly(1), tpoly_from({0, 4, 4}), tpoly_from({0, 0, 1, -1, 1}),
                           tpoly_from({0, 0, 0, 0, -10, -10}),
                           tpoly_from({0, 0, 0, 0, 0, 1, -1, 1}),
                           tpoly_from({0, 0, 0, 0, 0, 0, 0, 4, 4}), t_power(9)});
            c.expect_eq("listed numerator " + kk, a6, res.numerator);
            c.expect_eq("numerator at t = 1, " + kk,
                        QXPoly::from_coeffs({Rat(1), Rat(8), Rat(1), Rat(-20), Rat(1), Rat(8),
                                             Rat(1)}),
                        at_t1(res.numerator));
        }
        if ((k * claimed) % 2 == 0) {
            c.expect_eq("self-reversal " + kk, res.numerator,
                        twisted_reverse(res.numerator, claimed, k * claimed / 2, k));
        } else {
            c.note("self-reversal shift is not integral at " + kk);
        }
    }
    return c.finish();
}

/* generating functions of the odd-index normalized values, split by the
   parity of the argument */
CheckReport check_conj11(const RunConfig& cfg) {
    const long kmax = cfg.kmax(2);
    Checker c("sec4.conj11", "k <= " + std::to_string(kmax));
    for (long k = 0; k <= kmax; ++k) {
        const std::string kk = "k = " + std::to_string(k);
        const long m = 2 * k + 1;
        const long claimed = k * (k + 1) * (2 * k + 1) / 6;
        DenomSpec den_e, den_o;
        for (long j = 0; j <= k; ++j) {
            den_e.push_back(DenomFactor{+1, 2 * j + 1, 1, 1 + (2 * j + 1) * (k - j)});
            den_o.push_back(DenomFactor{+1, 2 * j, 1, 1 + j * (2 * (k - j) + 1)});
        }
        const long need_e = claimed + denom_xdegree(den_e) + kMargin + 1;
        const long need_o = claimed + denom_xdegree(den_o) + kMargin + 1;
        const long table_max = std::max(2 * (need_e - 1), 2 * (need_o - 1) + 1);
        if (table_max > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": needs a table of " + std::to_string(table_max + 1) +
                   " determinants, cap " + std::to_string(cfg.tpoly_cap));
            continue;
        }
        auto tab = normalized_table(Family::B, m, table_max);
        std::vector<TPoly> terms_e, terms_o;
        for (long a = 0; a < need_e; ++a) terms_e.push_back(tab[static_cast<size_t>(2 * a)]);
        for (long a = 0; a < need_o; ++a) terms_o.push_back(tab[static_cast<size_t>(2 * a + 1)]);
        auto res_e = genfun_structure(terms_e, den_e, claimed, kMargin);
        auto res_o = genfun_structure(terms_o, den_o, claimed, kMargin);
        c.expect_true("even-argument series tail " + kk + " over " + denom_render(den_e),
                      res_e.pass);
        c.expect_true("odd-argument series tail " + kk + " over " + denom_render(den_o),
                      res_o.pass);
        if (!res_e.pass || !res_o.pass) continue;
        c.expect_eq("even-argument numerator degree " + kk, claimed, res_e.numerator.degree());
        c.expect_eq("odd-argument numerator degree " + kk, claimed, res_o.numerator.degree());
        const long tshift = k * (k + 1) * (k * k + k + 1) / 3;
        try {
            XPoly want = twisted_reverse(res_e.numerator, claimed, tshift, 2 * k + 1)
                             .scaled(TPoly(parity_sign(k)));
            c.expect_eq("parity link " + kk, want, res_o.numerator);
        } catch (const NotDivisible& e) {
            c.expect_true("parity link " + kk, false, e.what());
        }
        if (k == 0) {
            c.expect_eq("even-argument numerator " + kk, xp({TPoly(1)}), res_e.numerator);
            c.expect_eq("odd-argument numerator " + kk, xp({TPoly(1)}), res_o.numerator);
        }
        if (k == 1)
            c.expect_eq("even-argument numerator " + kk, xp({TPoly(1), tpoly_from({0, -1, -2})}),
                        res_e.numerator);
        if (k == 2) {
            XPoly b02 = xp({TPoly(1), tpoly_from({0, -3, -16, -17, -6}),
                            tpoly_from({0, 0, 0, 0, 16, 44, 42, 16}),
                            tpoly_from({0, 0, 0, 0, 0, 9, 34, 28, 0, -13, -2}),
                            tpoly_from({0, 0, 0, 0, 0, 0, 0, 0, -14, -32, -36, -12, -1}),
                            tpoly_from({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6, 3})});
            c.expect_eq("even-argument numerator " + kk, b02, res_e.numerator);
            QXPoly t1 = at_t1(res_e.numerator);
            c.expect_eq("numerator at t = 1, " + kk,
                        QXPoly::from_coeffs({Rat(1), Rat(-42), Rat(118), Rat(56), Rat(-95),
                                             Rat(10)}),
                        t1);
            QXPoly fac = QXPoly::from_coeffs({Rat(1), Rat(1)}) *
                         QXPoly::from_coeffs({Rat(1), Rat(-43), Rat(161), Rat(-105), Rat(10)});
            c.expect_eq("factored form at t = 1, " + kk, fac, t1);
        }
    }
    return c.finish();
}

/* interleaved generating function of the odd-index values */
CheckReport check_cor12(const RunConfig& cfg) {
    const long kmax = std::min<long>(cfg.kmax(2), 2);
    const long window = cfg.window(30);
    Checker c("sec4.cor12", "k <= " + std::to_string(kmax));
    for (long k = 0; k <= kmax; ++k) {
        const std::string kk = "k = " + std::to_string(k);
        const long claimed = k * (k + 1) * (2 * k + 1) / 3 + 2 * (k + 1) + 2 * choose2(k + 1) +
                             4 * (k + 1) * k * (k - 1) / 6 + 1;
        DenomSpec den;
        for (long j = 0; j <= 2 * k + 1; ++j) {
            long e = j * k - (j + 1) * (j - 2) / 2;
            if (e > 0) den.push_back(DenomFactor{+1, j, 2, e});
        }
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need > window || need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": needs " + std::to_string(need) +
                   " series terms, window " + std::to_string(window) + ", cap " +
                   std::to_string(cfg.tpoly_cap));
            continue;
        }
        auto terms = normalized_table(Family::B, 2 * k + 1, need - 1);
        auto res = genfun_structure(terms, den, claimed, kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        c.expect_eq("numerator degree " + kk, claimed, res.numerator.degree());
        if (k == 0)
            c.expect_eq("numerator " + kk, xp({TPoly(1), TPoly(1), TPoly(1), t_power(1)}),
                        res.numerator);
    }
    return c.finish();
}

/* ------------------------------------------------------------------ */
/*  unit-weight family (sec5)                                          */
/* ------------------------------------------------------------------ */

TPoly rho_formula(long k, long n) {
    switch (k) {
        case 1:
            return TPoly(1);
        case 2:
            return TPoly((n + 1) / 2) + t_power(1).scaled(Rat((n + 2) / 2));
        case 3:
            return TPoly(((n + 1) * (n + 1)) / 4) +
                   t_power(1).scaled(Rat(((n + 2) * (n + 2)) / 4));
        case 4:
            if (n % 2 == 1) {
                long m = (n - 1) / 2;
                Rat lead = Rat(m + 1) * Rat(m + 2) * Rat(2 * m + 3) / Rat(6);
                TPoly inner = TPoly(m + 1) + t_power(1).scaled(Rat(m + 2));
                return (tpoly_from({1, 1}) * inner).scaled(lead);
            } else {
                long m = n / 2;
                Rat lead = Rat(m + 1) * Rat(m + 1) / Rat(6);
                TPoly inner = TPoly(Rat(m) * Rat(2 * m + 1)) +
                              t_power(1).scaled(Rat(4) * Rat(m) * Rat(m + 2)) +
                              t_power(2).scaled(Rat(m + 2) * Rat(2 * m + 3));
                return inner.scaled(lead);
            }
        default:
            throw BadArgument("no listed formula");
    }
}

CheckReport check_a_closedforms(const RunConfig& cfg) {
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec5.closedforms", "n <= " + std::to_string(nmax));
    auto base = det_table_poly(Family::A, 0, nmax);
    for (long n = 0; n <= nmax; ++n)
        c.expect_eq("offset 0, " + at_n(n), t_power(choose2(n)), base[static_cast<size_t>(n)]);
    for (long k = 1; k <= 4; ++k) {
        auto dk = normalized_table(Family::A, k, nmax);
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_kn(k, n);
            if (k == 1)
                c.expect_eq("offset 1 closed form, " + at_n(n),
                            t_power(n / 2).scaled(Rat(parity_sign(choose2(n)))),
                            dk[static_cast<size_t>(n)]);
            long e = floor_div(k * (n - 1) + 1, 2);
            TPoly lhs = dk[static_cast<size_t>(n)].scaled(Rat(parity_sign(k * choose2(n))));
            TPoly rho = rho_formula(k, n);
            // negative shifts at n = 0 are moved to the other side
            TPoly l = (e < 0) ? lhs.shifted_up(-e) : lhs;
            TPoly r = (e > 0) ? rho.shifted_up(e) : rho;
            c.expect_eq("listed factor form " + where, r, l);
        }
    }
    return c.finish();
}

CheckReport check_conj13(const RunConfig& cfg) {
    const long kmax = cfg.kmax(6);
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec5.conj13", "k <= " + std::to_string(kmax) + ", n <= " + std::to_string(nmax));
    for (long k = 1; k <= kmax; ++k) {
        auto dk = normalized_table(Family::A, k, nmax);
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_kn(k, n);
            const TPoly& v = dk[static_cast<size_t>(n)];
            c.expect_eq("degree " + where, (k * n) / 2, v.degree());
            long e = floor_div(k * (n - 1) + 1, 2);
            TPoly signedv = v.scaled(Rat(parity_sign(k * choose2(n))));
            TPoly rho;
            try {
                rho = (e >= 0) ? tpow_div(signedv, e) : signedv.shifted_up(-e);
            } catch (const NotDivisible& err) {
                c.expect_true("t-power factor " + where, false, err.what());
                continue;
            }
            c.expect_true("factor nonzero " + where, !rho.is_zero());
            c.expect_true("factor nonnegative " + where, coeffs_nonnegative(rho));
            c.expect_eq("factor degree " + where, k / 2, rho.degree());
        }
    }
    c.note("positivity is read as nonnegative coefficients with a nonzero value: at n = 0 the "
           "listed factors have zero constant terms");
    return c.finish();
}

CheckReport check_conj14(const RunConfig& cfg) {
    const long kmax = cfg.kmax(2);
    Checker c("sec5.conj14", "k <= " + std::to_string(kmax));
    for (long k = 1; k <= kmax; ++k) {
        const std::string kk = "even index, k = " + std::to_string(k);
        const long claimed = 2 * k * (k - 1) + 1;
        DenomSpec den{DenomFactor{-1, k, 1, 1}, DenomFactor{-1, 2 * k, 2, k * k}};
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto terms = normalized_table(Family::A, 2 * k, need - 1);
        auto res = genfun_structure(terms, den, claimed, kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        c.expect_eq("numerator degree " + kk, claimed, res.numerator.degree());
        if (k == 1) c.expect_eq("numerator " + kk, xp({TPoly(1), TPoly(1)}), res.numerator);
        if (k == 2) {
            XPoly a4 = xp({TPoly(1), tpoly_from({1, 3, 1}), tpoly_from({0, 0, 1, 5, 4}),
                           tpoly_from({0, 0, 0, 0, 4, 5, 1}),
                           tpoly_from({0, 0, 0, 0, 0, 0, 1, 3, 1}), t_power(8)});
            c.expect_eq("listed numerator " + kk, a4, res.numerator);
        }
    }
    for (long k = 0; k <= kmax; ++k) {
        const std::string kk = "odd index, k = " + std::to_string(k);
        const long claimed = 2 * k * k + 1;
        DenomSpec den{DenomFactor{+1, 2 * k + 1, 2, k * k + k + 1}};
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto terms = normalized_table(Family::A, 2 * k + 1, need - 1);
        auto res = genfun_structure(terms, den, claimed, kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        c.expect_eq("numerator degree " + kk, claimed, res.numerator.degree());
        if (k == 0) c.expect_eq("numerator " + kk, xp({TPoly(1), TPoly(1)}), res.numerator);
        if (k == 1) {
            XPoly a3 = xp({TPoly(1), tpoly_from({1, 2}), tpoly_from({0, 0, -2, -1}),
                           tpoly_from({0, 0, 0, -1})});
            c.expect_eq("listed numerator " + kk, a3, res.numerator);
        }
    }
    return c.finish();
}

CheckReport check_conj15(const RunConfig& cfg) {
    const long kmax = cfg.kmax(2);
    Checker c("sec5.conj15", "k <= " + std::to_string(kmax));
    for (long k = 1; k <= kmax; ++k) {
        const std::string kk = "even index, k = " + std::to_string(k);
        c.expect_eq("stated shift exponents agree, k = " + std::to_string(k),
                    2 * k * (((2 * k - 1) * (2 * k - 1)) / 4), 2 * k * k * (k - 1));
        const long claimed = 2 * k * (k - 1) + 1;
        DenomSpec den{DenomFactor{-1, k, 1, 1}, DenomFactor{-1, 2 * k, 2, k * k}};
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto res = genfun_structure(normalized_table(Family::A, 2 * k, need - 1), den, claimed,
                                    kMargin);
        if (!res.pass) {
            c.expect_true("series tail " + kk, false);
            continue;
        }
        c.expect_eq("bivariate self-reversal " + kk, res.numerator,
                    bivariate_reverse(res.numerator, claimed, 2 * k * k * (k - 1)));
    }
    for (long k = 0; k <= kmax; ++k) {
        const std::string kk = "odd index, k = " + std::to_string(k);
        const long claimed = 2 * k * k + 1;
        DenomSpec den{DenomFactor{+1, 2 * k + 1, 2, k * k + k + 1}};
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto res = genfun_structure(normalized_table(Family::A, 2 * k + 1, need - 1), den,
                                    claimed, kMargin);
        if (!res.pass) {
            c.expect_true("series tail " + kk, false);
            continue;
        }
        c.expect_eq("signed bivariate reversal " + kk,
                    res.numerator.scaled(TPoly(parity_sign(k))),
                    bivariate_reverse(res.numerator, claimed, (2 * k + 1) * k * k));
    }
    return c.finish();
}

/* ------------------------------------------------------------------ */
/*  alternating-weight family (sec6)                                   */
/* ------------------------------------------------------------------ */

CheckReport check_c_base(const RunConfig& cfg) {
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec6.base", "n <= " + std::to_string(nmax));
    auto base = det_table_poly(Family::C, 0, nmax);
    auto d1 = normalized_table(Family::C, 1, nmax);
    auto d2 = normalized_table(Family::C, 2, nmax);
    auto d3 = normalized_table(Family::C, 3, nmax);
    for (long n = 0; n <= nmax; ++n) {
        c.expect_eq("offset 0, " + at_n(n), t_power(choose2(n)), base[static_cast<size_t>(n)]);
        c.expect_eq("offset 1, " + at_n(n), TPoly(parity_sign(choose2(n))),
                    d1[static_cast<size_t>(n)]);
        c.expect_eq("offset 2, " + at_n(n), geom_sum(n), d2[static_cast<size_t>(n)]);
        TPoly gauss = poly_exact_div(
            (TPoly(1) - t_power(n + 1)) * (TPoly(1) - t_power(n + 2)),
            tpoly_from({1, -1}) * tpoly_from({1, 0, -1}));
        c.expect_eq("offset 3, " + at_n(n), gauss,
                    d3[static_cast<size_t>(n)].scaled(Rat(parity_sign(choose2(n)))));
    }
    long small = std::min<long>(3, nmax);
    auto d4 = normalized_table(Family::C, 4, small);
    auto d5 = normalized_table(Family::C, 5, small);
    const std::vector<TPoly> rows4 = {
        tpoly_from({1}),
        tpoly_from({1, 2, 2, 1}),
        tpoly_from({1, 2, 5, 4, 5, 2, 1}),
        tpoly_from({1, 2, 5, 8, 9, 9, 8, 5, 2, 1})};
    const std::vector<TPoly> rows5 = {
        tpoly_from({1}),
        tpoly_from({1, 2, 4, 2, 1}),
        tpoly_from({-1, -2, -7, -8, -14, -8, -7, -2, -1}),
        tpoly_from({-1, -2, -7, -12, -22, -26, -35, -26, -22, -12, -7, -2, -1})};
    for (long n = 0; n <= small; ++n) {
        c.expect_eq("listed row, offset 4, " + at_n(n), rows4[static_cast<size_t>(n)],
                    d4[static_cast<size_t>(n)]);
        c.expect_eq("listed row, offset 5, " + at_n(n), rows5[static_cast<size_t>(n)],
                    d5[static_cast<size_t>(n)]);
    }
    // the two displayed series heads
    QXPoly den4 = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), 2) *
                  poly_pow(QXPoly::from_coeffs({Rat(1), Rat(0), Rat(-1)}), 2);
    QXPoly den5 = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), 2) *
                  poly_pow(QXPoly::from_coeffs({Rat(1), Rat(0), Rat(-1)}), 4);
    SeriesQ s4 = ser_from_rational(QXPoly(1), den4, 5);
    SeriesQ s5 = ser_from_rational(QXPoly(1), den5, 5);
    c.expect_eq("series head, offset 4 pattern", tpoly_from({1, 2, 5, 8, 14}), s4.poly_prefix(4));
    c.expect_eq("series head, offset 5 pattern", tpoly_from({1, 2, 7, 12, 27}),
                s5.poly_prefix(4));
    return c.finish();
}

CheckReport check_conj16(const RunConfig& cfg) {
    const long kmax = cfg.kmax(3);
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec6.conj16",
              "index <= " + std::to_string(2 * kmax + 1) + ", n <= " + std::to_string(nmax));
    bool sign_noted = false;
    for (long m = 1; m <= 2 * kmax + 1; ++m) {
        auto dm = normalized_table(Family::C, m, nmax);
        const long half = m / 2;
        const long e2 = (m % 2 == 0) ? half * half - half : half * half;
        QXPoly sden = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), half) *
                      poly_pow(QXPoly::from_coeffs({Rat(1), Rat(0), Rat(-1)}), e2);
        SeriesQ stab = ser_from_rational(QXPoly(1), sden, nmax + 1);
        TPoly head = stab.poly_prefix(nmax);
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_mn(m, n);
            const TPoly& v = dm[static_cast<size_t>(n)];
            c.expect_eq("degree " + where, (m - 1) * n, v.degree());
            TPoly sv = (m % 2 == 1) ? v.scaled(Rat(parity_sign(choose2(n)))) : v;
            c.expect_true("palindromic " + where, is_palindromic(sv));
            c.expect_true("positive coefficients " + where, coeffs_positive(sv));
            for (long j = 0; j <= n; ++j)
                c.expect_eq("stable coefficient t^" + std::to_string(j) + ", " + where,
                            head.coeff(j), sv.coeff(j));
        }
        if (m % 2 == 0 && !sign_noted && nmax >= 2) {
            sign_noted = true;
            const TPoly& v2 = dm[2];
            c.finding("sign prefix applied to even index " + std::to_string(m) + ", n = 2",
                      render(v2), render(v2.scaled(Rat(parity_sign(choose2(2))))));
            c.note("the displayed sign prefix holds for odd indices only; even-index values "
                   "are positive as they stand, so the prefix is dropped there");
        }
    }
    c.note("the displayed stable-coefficient series is written in another variable letter; "
           "it is read in t");
    return c.finish();
}

struct BlockFormulas {
    std::vector<TPoly> known;       // empty slot = no listed formula
    std::vector<char> has;
};

BlockFormulas listed_blocks(long m, long n) {
    BlockFormulas bf;
    bf.known.resize(static_cast<size_t>(m));
    bf.has.assign(static_cast<size_t>(m), 0);
    auto set = [&](long j, TPoly p) {
        bf.known[static_cast<size_t>(j)] = std::move(p);
        bf.has[static_cast<size_t>(j)] = 1;
    };
    switch (m) {
        case 2:
            set(0, TPoly(1));
            set(1, TPoly(1));
            break;
        case 3:
            set(0, TPoly(1));
            set(1, tpoly_from({1, 1}));
            set(2, TPoly(1));
            break;
        case 4:
            set(0, TPoly(1));
            set(1, TPoly(n + 2) + t_power(1) - t_power(2).scaled(Rat(n + 2)));
            set(2, TPoly(n + 2) - t_power(1) - t_power(2).scaled(Rat(n + 2)));
            set(3, TPoly(-1));
            break;
        case 5:
            set(0, TPoly(1));
            set(1, tpoly_from({1, 0, -1}) * (TPoly(n + 2) + t_power(1).scaled(Rat(n + 3))));
            set(2, TPoly(Rat(n + 2) * Rat(n + 3)) - t_power(1) -
                       t_power(2).scaled(Rat(2) * Rat(n + 2) * Rat(n + 3)) - t_power(3) +
                       t_power(4).scaled(Rat(n + 2) * Rat(n + 3)));
            break;
        case 6:
            set(0, TPoly(1));
            set(1, TPoly(binom(n + 3, 2)) + t_power(1).scaled(Rat(n + 3)) -
                       t_power(2).scaled(Rat(n + 2) * Rat(n + 4)) -
                       t_power(3).scaled(Rat(n + 3)) + t_power(4).scaled(binom(n + 4, 2)));
            set(2, TPoly(binom(n + 3, 2) * Rat(n + 3)) - t_power(1).scaled(binom(n + 4, 2)) -
                       t_power(2).scaled(binom(n + 3, 2) * Rat(3 * n + 11)) +
                       t_power(3).scaled(Rat(n + 3) * Rat(n + 3) - Rat(2)) +
                       t_power(4).scaled(binom(n + 4, 2) * Rat(3 * n + 7)) -
                       t_power(5).scaled(binom(n + 3, 2)) -
                       t_power(6).scaled(binom(n + 4, 2) * Rat(n + 3)));
            set(5, TPoly(1));
            break;
        default:
            break;
    }
    return bf;
}

TPoly printed_c63(long n) {
    return TPoly(binom(n + 4, 2) * Rat(n + 3)) - t_power(1).scaled(binom(n + 3, 2)) -
           t_power(2).scaled(binom(n + 4, 2) * Rat(3 * n + 7)) +
           t_power(3).scaled(Rat(n + 3) * Rat(n + 3) - Rat(2)) +
           t_power(4).scaled(binom(n + 3, 2) * Rat(3 * n + 11)) -
           t_power(5).scaled(binom(n + 4, 2)) - t_power(6).scaled(binom(n + 3, 2) * Rat(n + 3));
}

TPoly printed_c64(long n) {
    return TPoly(binom(n + 4, 2)) - t_power(1).scaled(Rat(n + 3)) -
           t_power(2).scaled(Rat(n + 2) * Rat(n + 4)) + t_power(3).scaled(Rat(n + 3)) +
           t_power(4).scaled(binom(n + 4, 2));
}

CheckReport check_conj17(const RunConfig& cfg) {
    const long nmax = std::min(cfg.nmax(10), cfg.tpoly_cap);
    Checker c("sec6.conj17", "index <= 6, n <= " + std::to_string(nmax));
    // winner bookkeeping for the two blocks printed both ways
    std::map<long, std::string> winner;
    bool winner_conflict = false;
    std::map<std::pair<long, long>, char> reversal_reported;
    for (long m = 2; m <= 6; ++m) {
        const long half = m / 2;
        const long e2 = (m % 2 == 0) ? half * half - half : half * half;
        TPoly den = one_minus_t_pow(half) * one_minus_t2_pow(e2);
        auto dm = normalized_table(Family::C, m, nmax);
        // composition check for cells whose windows collide: rebuild the
        // numerator from the listed blocks instead of splitting it
        auto compose = [&](long n, const TPoly& v, const std::vector<long>& offsets) {
            BlockFormulas bf = listed_blocks(m, n);
            for (long j = 0; j < m; ++j) {
                if (bf.has[static_cast<size_t>(j)]) continue;
                if (m == 6 && (j == 3 || j == 4) && winner.count(j)) {
                    bf.known[static_cast<size_t>(j)] =
                        (winner[j] == "printed")
                            ? (j == 3 ? printed_c63(n) : printed_c64(n))
                            : (j == 3 ? reverse_poly(listed_blocks(6, n).known[2], 6)
                                      : reverse_poly(listed_blocks(6, n).known[1], 4));
                    bf.has[static_cast<size_t>(j)] = 1;
                } else {
                    return false;
                }
            }
            TPoly sum;
            for (long j = 0; j < m; ++j)
                sum += bf.known[static_cast<size_t>(j)]
                           .scaled(Rat(parity_sign(j)))
                           .shifted_up(offsets[static_cast<size_t>(j)]);
            c.expect_eq("listed composition " + at_mn(m, n), sum, v * den);
            return true;
        };
        std::vector<long> deferred;  // overlap cells revisited once winners are known
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_mn(m, n);
            TPoly v = (m % 2 == 1)
                          ? dm[static_cast<size_t>(n)].scaled(Rat(parity_sign(choose2(n))))
                          : dm[static_cast<size_t>(n)];
            std::vector<long> offsets, widths;
            for (long j = 0; j < m; ++j) {
                offsets.push_back(j * n + choose2(j + 1));
                widths.push_back(j * (m - 1 - j));
            }
            auto br = block_decompose(v, den, offsets, widths);
            if (br.status == BlockResult::Status::overlap) {
                if (!compose(n, v, offsets)) {
                    if (m == 6) {
                        deferred.push_back(n);
                    } else {
                        c.note("windows overlap at " + where +
                               " and not every block is listed; cell skipped");
                    }
                }
                continue;
            }
            c.expect_true("window split " + where,
                          br.status == BlockResult::Status::ok && br.stray.empty(), br.reason);
            if (br.status != BlockResult::Status::ok || !br.stray.empty()) continue;
            std::vector<TPoly> cj;
            for (long j = 0; j < m; ++j)
                cj.push_back(br.blocks[static_cast<size_t>(j)].scaled(Rat(parity_sign(j))));
            BlockFormulas bf = listed_blocks(m, n);
            for (long j = 0; j < m; ++j) {
                const std::string bj = "block j = " + std::to_string(j) + ", " + where;
                c.expect_eq("degree of " + bj, widths[static_cast<size_t>(j)],
                            cj[static_cast<size_t>(j)].degree());
                if (bf.has[static_cast<size_t>(j)])
                    c.expect_eq("listed " + bj, bf.known[static_cast<size_t>(j)],
                                cj[static_cast<size_t>(j)]);
            }
            if (m == 6) {
                // blocks 3 and 4 are printed twice with inconsistent values;
                // the determinant picks the survivor
                struct Cand {
                    long j;
                    TPoly printed;
                    TPoly reversed;
                };
                Cand cands[2] = {{3, printed_c63(n), reverse_poly(cj[2], 6)},
                                 {4, printed_c64(n), reverse_poly(cj[1], 4)}};
                for (const auto& cd : cands) {
                    const TPoly& actual = cj[static_cast<size_t>(cd.j)];
                    bool isp = (actual == cd.printed);
                    bool isr = (actual == cd.reversed);
                    c.expect_true("block j = " + std::to_string(cd.j) + " matches a printed "
                                  "candidate, " + where,
                                  isp || isr);
                    if (isp == isr) continue;
                    std::string now = isp ? "printed" : "reversal";
                    auto it = winner.find(cd.j);
                    if (it == winner.end()) {
                        winner[cd.j] = now;
                        c.finding("surviving candidate for block j = " + std::to_string(cd.j) +
                                      ", " + where,
                                  isp ? "reversal of block " + std::to_string(5 - cd.j)
                                      : "explicit printed formula",
                                  isp ? "explicit printed formula"
                                      : "reversal of block " + std::to_string(5 - cd.j));
                    } else if (it->second != now) {
                        winner_conflict = true;
                    }
                }
            }
            // reversal pairing across mirrored block positions
            for (long j = 0; 2 * j <= m - 1; ++j) {
                TPoly want = reverse_poly(cj[static_cast<size_t>(j)], j * (m - 1 - j))
                                 .scaled(Rat(parity_sign(m / 2 - 1)));
                if (want == cj[static_cast<size_t>(m - 1 - j)]) continue;
                auto key = std::make_pair(m, j);
                if (!reversal_reported.count(key)) {
                    reversal_reported[key] = 1;
                    c.finding("stated reversal pairing at index " + std::to_string(m) +
                                  ", j = " + std::to_string(j) + ", " + at_n(n),
                              render(want), render(cj[static_cast<size_t>(m - 1 - j)]));
                }
            }
        }
        for (long n : deferred) {
            TPoly v = (m % 2 == 1)
                          ? dm[static_cast<size_t>(n)].scaled(Rat(parity_sign(choose2(n))))
                          : dm[static_cast<size_t>(n)];
            std::vector<long> offsets;
            for (long j = 0; j < m; ++j) offsets.push_back(j * n + choose2(j + 1));
            if (!compose(n, v, offsets))
                c.note("windows overlap at " + at_mn(m, n) +
                       " and the block pair printed both ways stayed undecided; cell skipped");
        }
    }
    c.expect_true("candidate choice consistent across n", !winner_conflict);
    for (const auto& w : winner)
        c.note("block j = " + std::to_string(w.first) + " of index 6 follows the " + w.second +
               " form for every tested n");
    c.note("the listed index-3 blocks assign j = 1 twice; they are read as 1, 1+t, 1");
    return c.finish();
}

CheckReport check_conj18(const RunConfig& cfg) {
    const long kmax = cfg.kmax(2);
    Checker c("sec6.conj18", "k <= " + std::to_string(kmax));
    for (long k = 1; k <= kmax; ++k) {
        const std::string kk = "even index, k = " + std::to_string(k);
        const long claimed = (k - 1) * k * (2 * k - 1) / 3;
        DenomSpec den;
        for (long j = 0; j <= 2 * k - 1; ++j) {
            long e = k * j - (j - 1) * (j + 2) / 2;
            if (e > 0) den.push_back(DenomFactor{-1, j, 1, e});
        }
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto res = genfun_structure(normalized_table(Family::C, 2 * k, need - 1), den, claimed,
                                    kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        c.expect_eq("numerator degree " + kk, claimed, res.numerator.degree());
        if (k == 1) c.expect_eq("numerator " + kk, xp({TPoly(1)}), res.numerator);
        if (k == 2)
            c.expect_eq("numerator " + kk, xp({TPoly(1), TPoly(), tpoly_from({0, 0, 0, -1})}),
                        res.numerator);
        // stated self-reversal; the k = 2 instance lands on the negative
        const long tshift = (k - 1) * k * (2 * k - 1) * (2 * k - 1) / 6;
        try {
            XPoly tw = twisted_reverse(res.numerator, claimed, tshift, 2 * k - 1);
            bool plain = (tw == res.numerator);
            bool neg = (tw == res.numerator.scaled(TPoly(-1)));
            c.expect_true("self-reversal up to sign " + kk, plain || neg);
            if (neg && !plain) {
                c.finding("stated self-reversal sign " + kk, render(res.numerator), render(tw));
                c.note("the even-index reversal at k = " + std::to_string(k) +
                       " holds with an extra factor -1");
            }
        } catch (const NotDivisible& e) {
            c.expect_true("self-reversal up to sign " + kk, false, e.what());
        }
    }
    for (long k = 1; k <= kmax; ++k) {
        const std::string kk = "odd index, k = " + std::to_string(k);
        const long m = 2 * k - 1;
        DenomSpec den;
        for (long j = 0; j <= 2 * k - 2; ++j) {
            long e = k * j - (j - 1) * (j + 2) / 2 - (j + 1) / 2;
            if (e > 0) den.push_back(DenomFactor{+1, 2 * j, 2, e});
        }
        const long claimed = (k == 1) ? 1 : 3;
        if (k > 2) {
            c.note("skipped " + kk + ": no listed numerator degree");
            continue;
        }
        const long need = claimed + denom_xdegree(den) + kMargin + 1;
        if (need - 1 > cfg.tpoly_cap) {
            c.note("skipped " + kk + ": table cap");
            continue;
        }
        auto res = genfun_structure(normalized_table(Family::C, m, need - 1), den, claimed,
                                    kMargin);
        c.expect_true("series tail " + kk + " over " + denom_render(den), res.pass);
        if (!res.pass) continue;
        if (k == 1) {
            c.expect_eq("numerator " + kk, xp({TPoly(1), TPoly(1)}), res.numerator);
            c.expect_eq("self-reversal " + kk, res.numerator,
                        twisted_reverse(res.numerator, 1, 0, 0));
        }
        if (k == 2) {
            TPoly g3 = tpoly_from({1, 1, 1});
            XPoly true3 = xp({TPoly(1), g3, -(g3.shifted_up(1)), -t_power(3)});
            c.expect_eq("numerator " + kk, true3, res.numerator);
            XPoly listed3 = xp({TPoly(1), tpoly_from({1, 2, 1}), t_power(2)});
            c.finding("listed numerator " + kk, render(listed3), render(res.numerator));
            c.note("the numerator listed for the third column has degree 2; the series "
                   "determines a degree-3 one");
            c.expect_eq("self-reversal " + kk, res.numerator.scaled(TPoly::monomial(Rat(-1), 3)),
                        twisted_reverse(res.numerator, 3, 6, 2));
        }
    }
    c.note("the displayed odd reversal exponent is non-integral at the listed indices; "
           "with the numerator x-degree D in its place the reversal holds with sign "
           "(-1)^((m-1)/2) and t-shift (m-1)D/2");
    return c.finish();
}

CheckReport check_checkerboard(const RunConfig& cfg) {
    const long kmax = std::min<long>(cfg.kmax(3), 6);
    const long nmax = std::min<long>(cfg.nmax(4), 8);
    Checker c("sec6.checkerboard",
              "k <= " + std::to_string(kmax) + ", n <= " + std::to_string(nmax));
    const long seq_len = 2 * kmax + 2 + 2 * (2 * nmax + 1);
    std::vector<Rat> cv, cat;
    for (long i = 0; i < seq_len; ++i) cv.push_back(moment(Family::C, i).eval(Rat(-1)));
    for (long i = 0; i < seq_len; ++i) cat.push_back(Rat(catalan(i)));
    const std::vector<long> head = {1, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0};
    for (size_t i = 0; i < head.size(); ++i)
        c.expect_eq("sequence value at " + std::to_string(i), Rat(head[i]), cv[i]);
    auto hdet = [&](const std::vector<Rat>& s, long off, long sz) {
        return det_bareiss(hankel_matrix(s, off, sz));
    };
    for (long k = 0; k <= kmax; ++k) {
        for (long n = 0; n <= nmax; ++n) {
            const std::string where = at_kn(k, n);
            Rat ck = hdet(cat, k, n);
            Rat ck1 = hdet(cat, k + 1, n);
            c.expect_eq("even offset, even size, " + where, Rat(parity_sign(n)) * ck * ck,
                        hdet(cv, 2 * k, 2 * n));
            if (k >= 1)
                c.expect_eq("even offset, odd size, " + where, Rat(0),
                            hdet(cv, 2 * k, 2 * n + 1));
            c.expect_eq("odd offset, even size, " + where, ck * ck1,
                        hdet(cv, 2 * k + 1, 2 * n));
            c.expect_eq("odd offset, odd size, " + where, hdet(cat, k, n + 1) * ck1,
                        hdet(cv, 2 * k + 1, 2 * n + 1));
        }
    }
    // the displayed four identities read differently; their literal forms fail
    c.finding("displayed vanishing rule at offset 3, size 2", "0", hdet(cv, 3, 2).str());
    c.finding("displayed odd-offset, even-size rule at offset 1, size 2",
              (hdet(cat, 1, 1) * hdet(cat, 2, 1)).str(), hdet(cv, 1, 2).str());
    c.finding("displayed odd-offset, odd-size rule at offset 1, size 3",
              (hdet(cat, 1, 1) * hdet(cat, 2, 2)).str(), hdet(cv, 1, 3).str());
    c.note("the verified reading: even offsets vanish at odd sizes (offset >= 2), and the odd "
           "offset 2k+1 splits into Catalan determinants at offsets k and k+1, the first taking "
           "the larger parity block");
    return c.finish();
}

} // namespace

void add_polyfam_checks(std::vector<CheckDef>& out) {
    out.push_back({"sec4.closedforms", check_b_closedforms});
    out.push_back({"sec4.eq52_audit", check_eq52_audit});
    out.push_back({"sec4.conj8", check_conj8});
    out.push_back({"sec4.conj9", check_conj9});
    out.push_back({"sec4.conj10", check_conj10});
    out.push_back({"sec4.conj11", check_conj11});
    out.push_back({"sec4.cor12", check_cor12});
    out.push_back({"sec5.closedforms", check_a_closedforms});
    out.push_back({"sec5.conj13", check_conj13});
    out.push_back({"sec5.conj14", check_conj14});
    out.push_back({"sec5.conj15", check_conj15});
    out.push_back({"sec6.base", check_c_base});
    out.push_back({"sec6.conj16", check_conj16});
    out.push_back({"sec6.conj17", check_conj17});
    out.push_back({"sec6.conj18", check_conj18});
    out.push_back({"sec6.checkerboard", check_checkerboard});
}

} // namespace mbh
