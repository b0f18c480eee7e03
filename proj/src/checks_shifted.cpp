#include "mbh/checks.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbh/hankel.hpp"
#include "mbh/int_util.hpp"

namespace mbh {

namespace {

std::string dlab(long r, long k, long m) {
    return "r=" + std::to_string(r) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
}

std::string rkn(long r, long k, long n) {
    return "r=" + std::to_string(r) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

/* Residues mod 4r+2 where D_k^{(r)} can be nonzero: four descending runs of
   lengths k, k+1, k+1, k starting at 0, r+1, 2r+1, 3r+1. For k = 1 and k = 2
   this reproduces the explicitly listed residue sets. */
std::vector<char> support_mask(long r, long k) {
    long P = 4 * r + 2;
    std::vector<char> in(static_cast<size_t>(P), 0);
    auto mark = [&](long base, long count) {
        for (long j = 0; j < count; ++j) in[static_cast<size_t>(((base - j) % P + P) % P)] = 1;
    };
    mark(0, k);
    mark(r + 1, k + 1);
    mark(2 * r + 1, k + 1);
    mark(3 * r + 1, k);
    return in;
}

/* c(k, n) = sum_{j<=n} c(k-1, j) anchored at c(2, n) = 2n+1; empty for n < 0. */
Int c_rec(long k, long n) {
    if (n < 0) return Int(0);
    if (k == 2) return Int(2 * n + 1);
    Int s(0);
    for (long j = 0; j <= n; ++j) s += c_rec(k - 1, j);
    return s;
}

std::vector<Int> shifted_table(long r, long k, long periods) {
    return det_table_int(r, k, (4 * r + 2) * periods + 2);
}

CheckReport check_eq89(const RunConfig& cfg) {
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq89",
              "r <= " + std::to_string(rmax) + ", " + std::to_string(periods) + " periods of 2r+1");
    for (long r = 0; r <= rmax; ++r) {
        long P = 2 * r + 1;
        long hi = P * periods + r + 2;
        auto tab = det_table_int(r, 0, hi);
        for (long m = 0; m <= hi; ++m) {
            long res = m % P;
            Int want(0);
            if (res == 0) want = 1;
            else if (res == r + 1) want = parity_sign(choose2(r + 1));
            c.expect_eq(dlab(r, 0, m), want, tab[static_cast<size_t>(m)]);
        }
    }
    c.note("at r = 0 the two listed residues coincide mod 1 and the value-1 branch wins");
    return c.finish();
}

CheckReport check_zero_pattern(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.zero_pattern", "k <= " + std::to_string(kmax) + ", r <= " + std::to_string(rmax) +
                                       ", " + std::to_string(periods) + " periods");
    bool skipped = false;
    for (long k = 1; k <= kmax; ++k) {
        for (long r = 1; r <= rmax; ++r) {
            if (k >= 3 && r <= k) {
                skipped = true;
                continue;
            }
            long P = 4 * r + 2;
            auto mask = support_mask(r, k);
            auto tab = shifted_table(r, k, periods);
            for (long m = 0; m < P * periods; ++m)
                if (!mask[static_cast<size_t>(m % P)])
                    c.expect_eq(dlab(r, k, m), Int(0), tab[static_cast<size_t>(m)]);
        }
    }
    if (skipped)
        c.note("the stated residue support for k >= 3 applies to r > k; smaller shifts carry no vanishing claim");
    return c.finish();
}

CheckReport check_eq90(const RunConfig& cfg) {
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq90",
              "r <= " + std::to_string(rmax) + ", " + std::to_string(periods) + " periods");
    bool alt_noted = false;
    for (long r = 1; r <= rmax; ++r) {
        long P = 4 * r + 2;
        auto tab = shifted_table(r, 1, periods);
        int cr = parity_sign(choose2(r));
        for (long n = 0; n < periods; ++n) {
            long b = P * n;
            int sn = parity_sign(n);
            c.expect_eq(dlab(r, 1, b), Int(sn), tab[static_cast<size_t>(b)]);
            c.expect_eq(dlab(r, 1, b + 2 * r + 1), Int(sn), tab[static_cast<size_t>(b + 2 * r + 1)]);
            c.expect_eq(dlab(r, 1, b + r), Int(sn * cr), tab[static_cast<size_t>(b + r)]);
            c.expect_eq(dlab(r, 1, b + 3 * r + 1), Int(sn * cr),
                        tab[static_cast<size_t>(b + 3 * r + 1)]);
            c.expect_eq(dlab(r, 1, b + r + 1), Int(2 * sn), tab[static_cast<size_t>(b + r + 1)]);
            c.expect_eq(dlab(r, 1, b + 2 * r), Int(2 * sn * cr), tab[static_cast<size_t>(b + 2 * r)]);
        }
        if (r == 2 && !alt_noted) {
            alt_noted = true;
            c.finding("both doubled slots read as plain 2(-1)^n, at " + dlab(2, 1, 4), "2",
                      render(tab[4]));
            c.note("the chained display pins the doubled value to the slot at offset r+1; the slot at 2r carries the extra factor (-1)^C(r,2), first visible at r = 2");
        }
    }
    return c.finish();
}

CheckReport check_eq91_94(const RunConfig& cfg) {
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq91_94",
              "2 <= r <= " + std::to_string(rmax) + ", " + std::to_string(periods) + " periods");
    for (long r = 2; r <= rmax; ++r) {
        long P = 4 * r + 2;
        auto tab = shifted_table(r, 2, periods);
        int cm = parity_sign(choose2(r - 1));
        int cp = parity_sign(choose2(r + 1));
        long half = (r + 1) / 2;
        for (long n = 0; n < periods; ++n) {
            long b = P * n;
            long odd = 2 * n + 1;
            c.expect_eq(dlab(r, 2, b), Int(1), tab[static_cast<size_t>(b)]);
            c.expect_eq(dlab(r, 2, b + 2 * r + 1), Int(1), tab[static_cast<size_t>(b + 2 * r + 1)]);
            c.expect_eq(dlab(r, 2, b + r - 1), Int(cm), tab[static_cast<size_t>(b + r - 1)]);
            c.expect_eq(dlab(r, 2, b + 3 * r), Int(cm), tab[static_cast<size_t>(b + 3 * r)]);
            c.expect_eq(dlab(r, 2, b + r), Int((2 * r + 1) * odd - 2 * half),
                        tab[static_cast<size_t>(b + r)]);
            c.expect_eq(dlab(r, 2, b + 2 * r), Int(cp * ((2 * r + 1) * odd + 2 * half)),
                        tab[static_cast<size_t>(b + 2 * r)]);
            c.expect_eq(dlab(r, 2, b + r + 1), Int(4 * cp), tab[static_cast<size_t>(b + r + 1)]);
            c.expect_eq(dlab(r, 2, b + 2 * r - 1), Int(-4), tab[static_cast<size_t>(b + 2 * r - 1)]);
            c.expect_eq(dlab(r, 2, b + 3 * r + 1), Int((4 * r + 2) * (n + 1)),
                        tab[static_cast<size_t>(b + 3 * r + 1)]);
            c.expect_eq(dlab(r, 2, b + 4 * r + 1), Int(cp * (4 * r + 2) * (n + 1)),
                        tab[static_cast<size_t>(b + 4 * r + 1)]);
        }
    }
    c.note("at r = 2 the slots r+1 and 2r-1 coincide and the two stated values agree there");
    return c.finish();
}

CheckReport check_eq95(const RunConfig& cfg) {
    long periods = cfg.period_count(2);
    Checker c("sec7.eq95", std::to_string(periods) + " periods of 6");
    auto tab = shifted_table(1, 2, periods);
    for (long n = 0; n < periods; ++n) {
        long b = 6 * n;
        c.expect_eq(dlab(1, 2, b), Int(1), tab[static_cast<size_t>(b)]);
        c.expect_eq(dlab(1, 2, b + 3), Int(1), tab[static_cast<size_t>(b + 3)]);
        c.expect_eq(dlab(1, 2, b + 1), Int(6 * n + 1), tab[static_cast<size_t>(b + 1)]);
        c.expect_eq(dlab(1, 2, b + 2), Int(-(6 * n + 5)), tab[static_cast<size_t>(b + 2)]);
        c.expect_eq(dlab(1, 2, b + 4), Int(6 * (n + 1)), tab[static_cast<size_t>(b + 4)]);
        c.expect_eq(dlab(1, 2, b + 5), Int(-6 * (n + 1)), tab[static_cast<size_t>(b + 5)]);
    }
    c.note("two of the six left-hand sides print a stray second argument; both are read as plain evaluations at 6n+4 and 6n+5");
    return c.finish();
}

CheckReport check_seqdata(const RunConfig&) {
    Checker c("sec7.seqdata", "five tabulated runs");
    struct Row {
        long r, k;
        std::vector<long> vals;
    };
    const std::vector<Row> rows = {
        {1, 1, {1, 1, 2, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1, 2, 1, 1, 0}},
        {2, 1, {1, 0, -1, 2, -2, 1, 0, -1, 0, 0, -1, 0, 1, -2, 2, -1, 0, 1, 0, 0}},
        {2, 2, {1, 1, 3, -4, -7, 1, 1, 10, 0, -10, 1, 1, 13, -4, -17, 1, 1, 20, 0, -20}},
        {3, 2, {1, 0, -1, 3, 4,  -4, 11, 1, 0, -1, 14, 0, 0, 14,
                1, 0, -1, 17, 4, -4, 25, 1, 0, -1, 28, 0, 0, 28}},
        {1, 2, {1, 1, -5, 1, 6, -6, 1, 7, 11, 1, 12, -12}},
    };
    bool misprint_hit = false;
    for (const auto& row : rows) {
        auto tab = det_table_int(row.r, row.k, static_cast<long>(row.vals.size()) - 1);
        for (size_t i = 0; i < row.vals.size(); ++i) {
            if (tab[i] != Int(row.vals[i])) {
                c.finding(dlab(row.r, row.k, static_cast<long>(i)), std::to_string(row.vals[i]),
                          render(tab[i]));
                if (row.r == 1 && row.k == 2 && i == 8) misprint_hit = true;
            }
        }
    }
    if (misprint_hit)
        c.note("the run for k=2, r=1 disagrees at position 8; the residue formula -(6n+5) = -11 matches the computed value, so the tabulated 11 drops a sign");
    return c.finish(true);
}

CheckReport check_eq96_98(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq96_98", "k <= " + std::to_string(kmax) + ", r <= " + std::to_string(rmax) +
                                  ", " + std::to_string(periods) + " periods");
    std::set<long> f97a, f97b, f98a, f98b;
    std::set<std::pair<long, long>> f98range;
    for (long k = 1; k <= kmax; ++k) {
        Int two_k = int_pow(Int(2), static_cast<unsigned long>(k));
        for (long r = 1; r <= rmax; ++r) {
            long P = 4 * r + 2;
            auto tab = shifted_table(r, k, periods);
            if (r >= k - 1) {
                int s96 = parity_sign(choose2(r - k + 1));
                for (long n = 0; n < periods; ++n) {
                    long b = P * n;
                    int skn = parity_sign(k * n);
                    c.expect_eq(dlab(r, k, b), Int(skn), tab[static_cast<size_t>(b)]);
                    c.expect_eq(dlab(r, k, b + r - k + 1) + " times (-1)^C(r-k+1,2)", Int(skn),
                                Int(tab[static_cast<size_t>(b + r - k + 1)] * s96));
                }
            }
            if (r >= k) {
                Int vA0 = tab[static_cast<size_t>(r + 1)];
                Int vB0 = tab[static_cast<size_t>(2 * r - k + 1)];
                c.expect_eq("magnitude 2^k of the slot r+1 at " + rkn(r, k, 0), two_k, Int(abs(vA0)));
                c.expect_eq("magnitude 2^k of the slot 2r-k+1 at " + rkn(r, k, 0), two_k,
                            Int(abs(vB0)));
                for (long n = 1; n < periods; ++n) {
                    long b = P * n;
                    int skn = parity_sign(k * n);
                    c.expect_eq(dlab(r, k, b + r + 1) + " times (-1)^(kn)", vA0,
                                Int(tab[static_cast<size_t>(b + r + 1)] * skn));
                    c.expect_eq(dlab(r, k, b + 2 * r - k + 1) + " times (-1)^(kn)", vB0,
                                Int(tab[static_cast<size_t>(b + 2 * r - k + 1)] * skn));
                }
                int sA = sgn(vA0) < 0 ? -1 : 1;
                int sB = sgn(vB0) < 0 ? -1 : 1;
                if (k == 1) {
                    c.expect_eq("unit factor of the slot r+1 at " + rkn(r, k, 0), 1, sA);
                    c.expect_eq("unit factor of the slot 2r-k+1 at " + rkn(r, k, 0),
                                parity_sign(choose2(r)), sB);
                } else if (k == 2) {
                    c.expect_eq("unit factor of the slot r+1 at " + rkn(r, k, 0),
                                parity_sign(choose2(r + 1)), sA);
                    c.expect_eq("unit factor of the slot 2r-k+1 at " + rkn(r, k, 0), -1, sB);
                } else {
                    c.note("measured unit factors at k=" + std::to_string(k) +
                           ", r=" + std::to_string(r) + ": slot r+1 carries " + std::to_string(sA) +
                           ", slot 2r-k+1 carries " + std::to_string(sB));
                }
                int pA = parity_sign(choose2(k + 1) * choose2(r + 1));
                if (sA != pA && !f97a.count(k)) {
                    f97a.insert(k);
                    c.finding("stated unit factor (-1)^(C(k+1,2)C(r+1,2)) for the slot r+1 at " +
                                  rkn(r, k, 0),
                              std::to_string(pA), std::to_string(sA));
                }
                if (!f97b.count(k)) {
                    for (long n = 0; n < periods; ++n) {
                        const Int& got = tab[static_cast<size_t>(P * n + 2 * r - k + 1)];
                        if (got != -two_k) {
                            f97b.insert(k);
                            c.finding("constant -2^k reading of the slot 2r-k+1 at " + rkn(r, k, n),
                                      render(Int(-two_k)), render(got));
                            break;
                        }
                    }
                }
            }
            if (r >= k - 1) {
                int s98 = parity_sign(choose2(r - k + 1));
                for (long n = 0; n < periods; ++n) {
                    long b = P * n;
                    int skn = parity_sign(k * n);
                    c.expect_eq(dlab(r, k, b + 2 * r + 1), Int(skn),
                                tab[static_cast<size_t>(b + 2 * r + 1)]);
                    c.expect_eq(dlab(r, k, b + 3 * r - k + 2), Int(skn * s98),
                                tab[static_cast<size_t>(b + 3 * r - k + 2)]);
                    if (!f98a.count(k) && tab[static_cast<size_t>(b + 2 * r + 1)] != Int(1)) {
                        f98a.insert(k);
                        c.finding("constant-1 reading of the slot 2r+1 at " + dlab(r, k, b + 2 * r + 1),
                                  "1", render(tab[static_cast<size_t>(b + 2 * r + 1)]));
                    }
                }
                int sp = parity_sign(choose2(r - 1));
                if (sp != s98 && !f98b.count(k)) {
                    f98b.insert(k);
                    c.finding("stated sign (-1)^C(r-1,2) for the slot 3r-k+2 at " + rkn(r, k, 0),
                              std::to_string(sp),
                              render(tab[static_cast<size_t>(3 * r - k + 2)]));
                }
            } else if (!f98range.count({k, r})) {
                f98range.insert({k, r});
                c.finding("constant-1 reading of the slot 2r+1 below r = k-1, at " +
                              dlab(r, k, 2 * r + 1),
                          "1", render(tab[static_cast<size_t>(2 * r + 1)]));
            }
        }
    }
    c.note("the constant-1 pair at slots 2r+1 and 3r-k+2 holds with an extra factor (-1)^(kn), sign (-1)^C(r-k+1,2) on the second slot, and range r >= k-1");
    c.note("the doubled-slot signs for k <= 2 match the two k = 1 and k = 2 displays; for k >= 3 only the magnitude 2^k and the n-independence of the unit factors are asserted");
    return c.finish();
}

CheckReport check_eq99(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq99", "k <= " + std::to_string(kmax) + ", max(k-2,1) <= r <= " +
                               std::to_string(rmax) + ", " + std::to_string(periods) + " periods");
    std::set<long> fsign;
    for (long k = 1; k <= kmax; ++k) {
        for (long r = std::max(k - 2, 1L); r <= rmax; ++r) {
            long P = 4 * r + 2;
            auto tab = shifted_table(r, k, periods);
            for (long n = 0; n < periods; ++n) {
                long b = P * n;
                Int mag = int_pow(Int((4 * r + 2) * (n + 1)), static_cast<unsigned long>(k - 1));
                int s1 = parity_sign(k * (n + choose2(r)));
                c.expect_eq(dlab(r, k, b + 3 * r + 1), Int(s1 * mag),
                            tab[static_cast<size_t>(b + 3 * r + 1)]);
                int s2 = parity_sign(k * n + (k + 1) * choose2(r + k - 1) + (k % 4 == 1 ? 1 : 0));
                c.expect_eq(dlab(r, k, b + 4 * r + 3 - k), Int(s2 * mag),
                            tab[static_cast<size_t>(b + 4 * r + 3 - k)]);
                int s1p = parity_sign(k * choose2(n + choose2(r)));
                if (s1p != s1 && !fsign.count(k)) {
                    fsign.insert(k);
                    c.finding("binomial sign exponent for the slot 3r+1 at " + rkn(r, k, n),
                              render(Int(s1p * mag)), render(tab[static_cast<size_t>(b + 3 * r + 1)]));
                }
            }
        }
    }
    c.note("the slot 3r+1 carries (-1)^(k(n+C(r,2))); the displayed binomial exponent C(n+C(r,2),2) fails for odd k");
    c.note("the second line holds as displayed, including the bracket term for k = 1 mod 4; its argument is taken literally, so at k = 1 it lands in the following block");
    return c.finish();
}

CheckReport check_d4_formulas(const RunConfig& cfg) {
    Checker c("sec7.d4_formulas", "k = 4, r <= 3, offset-1 slots");
    if (cfg.kmax(4) < 4) {
        c.inconclusive("needs k up to 4");
        return c.finish();
    }
    long nvals = std::max<long>(3, cfg.period_count(2) + 1);
    {
        long hi = std::max(6 * (nvals - 1) + 1, 37L);
        auto tab = det_table_int(1, 4, hi);
        for (long n = 0; n < nvals; ++n) {
            Int want = Int(2 * n + 1) * Int(3 * n + 2) * Int(18 * n * n + 21 * n + 2);
            c.expect_eq(dlab(1, 4, 6 * n + 1), want, tab[static_cast<size_t>(6 * n + 1)]);
        }
        c.finding("middle factor (2n+3) of the r = 1 product at n = 0", "6", render(tab[1]));
        c.note("the verified middle factor at r = 1 is (3n+2); the displayed (2n+3) agrees only at n = 1");
        std::vector<Int> v;
        for (long n = 0; n <= 6; ++n) v.push_back(tab[static_cast<size_t>(6 * n + 1)]);
        for (int d = 0; d < 4; ++d) {
            std::vector<Int> w;
            for (size_t i = 1; i < v.size(); ++i) w.push_back(v[i] - v[i - 1]);
            v = std::move(w);
        }
        for (size_t i = 0; i < v.size(); ++i)
            c.expect_eq("fourth difference of the r = 1 slot values at n = " + std::to_string(i),
                        Int(2592), v[i]);
    }
    {
        auto tab = det_table_int(2, 4, 10 * (nvals - 1) + 1);
        for (long n = 0; n < nvals; ++n) {
            Int want = -(Int(5 * n + 2) * Int(500 * n * n * n + 700 * n * n + 165 * n - 6));
            c.expect_eq("three times " + dlab(2, 4, 10 * n + 1), want,
                        Int(tab[static_cast<size_t>(10 * n + 1)] * 3));
        }
        c.finding("overall sign of the r = 2 quotient at n = 0", "-4", render(tab[1]));
    }
    {
        auto tab = det_table_int(3, 4, 14 * (nvals - 1) + 1);
        for (long n = 0; n < nvals; ++n) {
            Int want = -(Int(14 * n + 3) * Int(196 * n * n + 63 * n - 1));
            c.expect_eq("three times " + dlab(3, 4, 14 * n + 1), want,
                        Int(tab[static_cast<size_t>(14 * n + 1)] * 3));
        }
        c.finding("overall sign of the r = 3 quotient at n = 0", "-1", render(tab[1]));
    }
    c.note("both quotient formulas hold after a global sign flip; the constant fourth difference at r = 1 matches the stated polynomial-growth degree bound k^2 for even k");
    return c.finish();
}

CheckReport check_eq100(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq100", "k <= " + std::to_string(kmax) + ", max(k-2,1) <= r <= " +
                                std::to_string(rmax) + ", " + std::to_string(periods) + " periods");
    for (long k = 1; k <= kmax; ++k) {
        Int two_k = int_pow(Int(2), static_cast<unsigned long>(k));
        for (long r = std::max(k - 2, 1L); r <= rmax; ++r) {
            long P = 4 * r + 2;
            auto tab = shifted_table(r, k, periods);
            int sL = parity_sign(choose2(r + 1 - k));
            Int bin = binom(floor_div(r + k - 1, 2), k - 1);
            for (long n = 0; n < periods; ++n) {
                long b = P * n;
                Int lhs = tab[static_cast<size_t>(b + r)] * sL +
                          tab[static_cast<size_t>(b + 2 * (r + 1) - k)];
                Int rhs = Int(parity_sign(k * n + (k + 1) * choose2(r + 1))) * two_k * bin;
                c.expect_eq("signed sum of slots r and 2(r+1)-k at " + rkn(r, k, n), rhs, lhs);
            }
        }
    }
    c.note("the bracketed pair on the right is a binomial coefficient C(floor((r+k-1)/2), k-1)");
    c.note("the sign (-1)^C(r+1-k,2) uses the generalized m(m-1)/2 when r+1-k is negative; at k = 4, r = 2 the two slots coincide and both sides vanish");
    return c.finish();
}

CheckReport check_eq101(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq101", "2 <= k <= " + std::to_string(kmax) + ", max(k-3,1) <= r <= " +
                                std::to_string(rmax) + ", " + std::to_string(periods) + " periods");
    for (long k = 2; k <= kmax; ++k) {
        for (long r = std::max(k - 3, 1L); r <= rmax; ++r) {
            long P = 4 * r + 2;
            auto tab = shifted_table(r, k, periods);
            int sL = parity_sign(choose2(r + 1 - k));
            Int cval = c_rec(k, floor_div(r + 2 - k, 2));
            for (long n = 0; n < periods; ++n) {
                long b = P * n;
                Int lhs = tab[static_cast<size_t>(b + 2 * r)] * sL +
                          tab[static_cast<size_t>(b + 3 * r + 3 - k)];
                Int rhs = Int(parity_sign(k * n)) * cval;
                c.expect_eq("signed sum of slots 2r and 3r+3-k at " + rkn(r, k, n), rhs, lhs);
            }
        }
    }
    c.note("c(k, n) follows the stated recursion from c(2, n) = 2n+1, with empty sums below n = 0; at k = 4, r = 1 the floor argument is negative and both sides vanish");
    c.note("k = 1 is below the recursion's base case and is not asserted");
    return c.finish();
}

CheckReport check_eq102(const RunConfig& cfg) {
    long kmax = cfg.kmax(4);
    long rmax = cfg.rmax(4);
    long periods = cfg.period_count(2);
    Checker c("sec7.eq102", "k <= " + std::to_string(kmax) + ", r <= " + std::to_string(rmax) +
                                ", " + std::to_string(periods) + " periods");
    std::set<long> fsign;
    bool k1_noted = false;
    bool k4_noted = false;
    for (long k = 1; k <= kmax; ++k) {
        for (long r = std::max(k - 3, 1L); r <= rmax; ++r) {
            long P = 4 * r + 2;
            auto tab = shifted_table(r, k, periods);
            int sL = parity_sign(choose2(r + 1 - k));
            for (long n = 0; n < periods; ++n) {
                long b = P * n;
                Int lhs = tab[static_cast<size_t>(b + 4 * (r + 1) - k)] -
                          tab[static_cast<size_t>(b + 3 * r)] * sL;
                if (k == 1 && r == 1) {
                    if (n == 0) {
                        c.finding("vanishing difference of slots 4(r+1)-k and 3r at " + rkn(1, 1, 0),
                                  "0", render(lhs));
                        if (!k1_noted) {
                            k1_noted = true;
                            c.note("at k = 1, r = 1 the difference alternates as -2(-1)^n instead of vanishing; the k = 1 case is asserted from r = 2 on");
                        }
                    }
                    continue;
                }
                if (k <= 2) {
                    c.expect_eq("difference of slots 4(r+1)-k and 3r at " + rkn(r, k, n), Int(0),
                                lhs);
                    continue;
                }
                Int mag = int_pow(Int((4 * r + 2) * (n + 1)), static_cast<unsigned long>(k - 1));
                Int bin = binom(floor_div(r + k - 3, 2), k - 3);
                if (r < k - 2) {
                    if (n == 0 && !k4_noted) {
                        k4_noted = true;
                        c.finding("product reading of the difference below r = k-2, at " +
                                      rkn(r, k, 0),
                                  render(Int(Int(parity_sign(k * choose2(choose2(r)))) * bin * mag)),
                                  render(lhs));
                        c.note("below r = k-2 the displayed right side no longer matches; the identity is asserted for r >= k-2");
                    }
                    continue;
                }
                int s = parity_sign(k * (n + choose2(r)));
                c.expect_eq("difference of slots 4(r+1)-k and 3r at " + rkn(r, k, n),
                            Int(Int(s) * bin * mag), lhs);
                int sp = parity_sign(k * choose2(n + choose2(r)));
                if (sp != s && !fsign.count(k)) {
                    fsign.insert(k);
                    c.finding("binomial sign exponent of the difference at " + rkn(r, k, n),
                              render(Int(Int(sp) * bin * mag)), render(lhs));
                }
            }
        }
    }
    c.note("for k <= 2 the binomial factor C(., k-3) vanishes and the difference is checked to be zero");
    c.note("for k >= 3 the sign reads (-1)^(k(n+C(r,2))) like the slot-3r+1 evaluation; the displayed binomial exponent fails for odd k");
    return c.finish();
}

} // namespace

void add_shifted_checks(std::vector<CheckDef>& out) {
    out.push_back({"sec7.eq89", check_eq89});
    out.push_back({"sec7.zero_pattern", check_zero_pattern});
    out.push_back({"sec7.eq90", check_eq90});
    out.push_back({"sec7.eq91_94", check_eq91_94});
    out.push_back({"sec7.eq95", check_eq95});
    out.push_back({"sec7.seqdata", check_seqdata});
    out.push_back({"sec7.eq96_98", check_eq96_98});
    out.push_back({"sec7.eq99", check_eq99});
    out.push_back({"sec7.d4_formulas", check_d4_formulas});
    out.push_back({"sec7.eq100", check_eq100});
    out.push_back({"sec7.eq101", check_eq101});
    out.push_back({"sec7.eq102", check_eq102});
}

} // namespace mbh
