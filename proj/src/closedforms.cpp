#include "mbh/closedforms.hpp"

#include <functional>
#include <string>

#include "mbh/errors.hpp"
#include "mbh/int_util.hpp"
#include "mbh/matrix.hpp"

namespace mbh {

namespace {

QXPoly linear(long c) { return QXPoly::from_coeffs({Rat(c), Rat(1)}); } // x + c

} // namespace

QXPoly r_poly(long k) {
    if (k < 0) throw BadArgument("negative index " + std::to_string(k));
    QXPoly acc(1);
    Rat denom(1);
    for (long j = 1; j <= k; ++j) {
        long e = std::min(j, k - j);
        for (long rep = 0; rep < e; ++rep) {
            acc = acc * linear(j);
            denom = denom * Rat(j);
        }
    }
    return acc.scaled(Rat(1) / denom);
}

QXPoly s_double_product(long k) {
    if (k < 0) throw BadArgument("negative index " + std::to_string(k));
    // inner bound is ceil(k/2): the floor/floor reading collapses at k = 3
    QXPoly acc(1);
    Rat denom(1);
    for (long i = 1; i <= k / 2; ++i) {
        for (long j = 1; j <= (k + 1) / 2; ++j) {
            acc = acc * linear(i + j - 1);
            denom = denom * Rat(i + j - 1);
        }
    }
    return acc.scaled(Rat(1) / denom);
}

QXPoly r_via_ratio(long k) {
    if (k < 1) throw BadArgument("ratio form needs k >= 1");
    QXPoly acc = r_poly(k - 1);
    for (long j = (k + 1) / 2; j <= k - 1; ++j)
        acc = (acc * linear(j)).scaled(Rat(1, j));
    return acc;
}

QXPoly binom_poly(long c, long m) {
    if (m < 0) return QXPoly();
    QXPoly acc(1);
    for (long l = 0; l < m; ++l) acc = acc * linear(c - l);
    Rat mfact(1);
    for (long l = 2; l <= m; ++l) mfact = mfact * Rat(l);
    return acc.scaled(Rat(1) / mfact);
}

QXPoly r_via_det(long k) {
    if (k < 1) throw BadArgument("determinant form needs k >= 1");
    long s = (k - 1) / 2 + 1;
    long h = k / 2;
    Mat<TPoly> m(s);
    for (long i = 0; i < s; ++i)
        for (long j = 0; j < s; ++j) m.at(i, j) = binom_poly(h + i + j, h + j);
    return det_bareiss_serial(m);
}

QXPoly v_ab(long a, long b) {
    if (a < 1 || b < 0) throw BadArgument("v_ab needs a >= 1, b >= 0");
    QXPoly acc(1);
    for (long j = 1; j <= a; ++j)
        for (long i = 1; i <= b; ++i) acc = acc * linear(j - i);
    return acc;
}

Rat v_ab_value(long a, long b, long n) {
    Rat acc(1);
    for (long j = 1; j <= a; ++j)
        for (long i = 1; i <= b; ++i) acc = acc * Rat(n + j - i);
    return acc;
}

SeriesQ F_ab_series(long a, long b, long wanted) {
    if (a < 1 || b < 0) throw BadArgument("operator needs a >= 1, b >= 0");
    std::vector<Rat> ones(static_cast<size_t>(wanted + b + 2), Rat(1));
    SeriesQ s = SeriesQ::from_coeffs(std::move(ones));
    for (long pass = 0; pass < b; ++pass) {
        for (long d = 0; d < a; ++d) s = ser_derivative(s);
        s = ser_shift_up(s, a - 1);
    }
    return s;
}

QXPoly G_extract(long a, long b, long wanted) {
    if (b < 1) throw BadArgument("extraction needs b >= 1");
    long d = (a - 1) * (b - 1);
    if (wanted < d + a * b + 7) throw InsufficientTerms("need more terms for tail check");
    SeriesQ f = F_ab_series(a, b, wanted);
    QXPoly pole = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), a * b + 1);
    SeriesQ cleared = f * SeriesQ::from_poly(pole);
    for (long i = 0; i < a - 1; ++i)
        if (!is_zero(cleared.coeff(i)))
            throw NotPolynomial("low-order coefficient " + std::to_string(i) + " survives");
    Rat scale = Rat(1) / v_ab_value(a, b, b);
    std::vector<Rat> g;
    for (long i = 0; i <= d; ++i) g.push_back(cleared.coeff(a - 1 + i) * scale);
    for (long i = a - 1 + d + 1; i < cleared.order(); ++i)
        if (!is_zero(cleared.coeff(i)))
            throw NotPolynomial("tail coefficient " + std::to_string(i) + " survives");
    QXPoly gp = QXPoly::from_coeffs(std::move(g));
    if (gp.degree() != d)
        throw DegreeMismatch("degree " + std::to_string(gp.degree()) + " vs claimed " +
                             std::to_string(d));
    return gp;
}

QXPoly A_extract(long m, long wanted) {
    if (m < 0) throw BadArgument("negative index " + std::to_string(m));
    long k = m / 2;
    long e, d;
    if (m % 2 == 0) {
        e = k * k + 1;
        d = k >= 1 ? (k - 1) * (k - 1) : 0;
    } else {
        e = k * k + k + 1;
        d = k * k - k;
    }
    if (wanted < d + e + 6) throw InsufficientTerms("need more terms for tail check");
    QXPoly rm = r_poly(m);
    std::vector<Rat> vals;
    for (long n = 0; n < wanted; ++n) vals.push_back(rm.eval(Rat(n)));
    SeriesQ sum = SeriesQ::from_coeffs(std::move(vals));
    QXPoly pole = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), e);
    SeriesQ cleared = sum * SeriesQ::from_poly(pole);
    std::vector<Rat> g;
    for (long i = 0; i <= d; ++i) g.push_back(cleared.coeff(i));
    for (long i = d + 1; i < cleared.order(); ++i)
        if (!is_zero(cleared.coeff(i)))
            throw NotPolynomial("tail coefficient " + std::to_string(i) + " survives");
    QXPoly gp = QXPoly::from_coeffs(std::move(g));
    if (gp.degree() != d)
        throw DegreeMismatch("degree " + std::to_string(gp.degree()) + " vs claimed " +
                             std::to_string(d));
    return gp;
}

QXPoly ix_twist(const QXPoly& p) {
    std::vector<Rat> cs(p.coeffs());
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i % 2 == 1 && !cs[i].is_zero())
            throw OddTermInEvenPoly("odd coefficient at exponent " + std::to_string(i));
        if (i % 4 == 2) cs[i] = -cs[i];
    }
    return QXPoly::from_coeffs(std::move(cs));
}

BTriple B_polys(long k, long wanted) {
    long e = k * k + k + 1;
    QXPoly A = A_extract(2 * k + 1, wanted);
    QXPoly up = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(1)}), e);
    QXPoly um = poly_pow(QXPoly::from_coeffs({Rat(1), Rat(-1)}), e);
    QXPoly U = A * up;
    QXPoly V = neg_x(A) * um;
    BTriple out;
    out.b0 = (U + V).scaled(Rat(1, 2));
    out.b1 = tpow_div(U - V, 1).scaled(Rat(1, 2));
    out.b = ix_twist(out.b0) + ix_twist(out.b1).shifted_up(1);
    return out;
}

QXPoly fib_poly(long n) {
    if (n < -1) throw BadArgument("index below -1");
    QXPoly prev;        // F_{-1} = 0
    QXPoly cur(1);      // F_0 = 1
    if (n == -1) return prev;
    for (long i = 1; i <= n; ++i) {
        QXPoly next = cur.shifted_up(1) - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

QXPoly syt_descent_poly(long a, long b) {
    if (a < 1 || b < 1) throw BadArgument("rectangle sides must be positive");
    if (a * b > 16) throw TooLarge("tableau enumeration capped at 16 cells");
    long cells = a * b;
    std::vector<long> fill(static_cast<size_t>(b), 0);
    std::vector<Int> count(static_cast<size_t>(cells), Int(0));
    std::function<void(long, long, long)> place = [&](long v, long prev_row, long des) {
        if (v > cells) {
            ++count[static_cast<size_t>(des)];
            return;
        }
        for (long row = 0; row < b; ++row) {
            if (fill[static_cast<size_t>(row)] >= a) continue;
            if (row > 0 && fill[static_cast<size_t>(row - 1)] <= fill[static_cast<size_t>(row)])
                continue;
            ++fill[static_cast<size_t>(row)];
            place(v + 1, row, des + ((v > 1 && row > prev_row) ? 1 : 0));
            --fill[static_cast<size_t>(row)];
        }
    };
    place(1, 0, 0);
    QXPoly g;
    for (long d = 0; d < cells; ++d)
        if (!is_zero(count[static_cast<size_t>(d)])) {
            if (d < b - 1) throw BadArgument("descent count below row minimum");
            g = g + QXPoly::monomial(Rat(count[static_cast<size_t>(d)]), d - (b - 1));
        }
    return g;
}

TPoly moment_binomial_sum(long n) {
    if (n < 0) throw BadArgument("negative index " + std::to_string(n));
    if (n == 0) return TPoly(1);
    TPoly out;
    for (long j = 1; j <= n + 1; ++j) {
        Int c = binom((n - 1) / 2, j - 1) * binom(n / 2, j);
        if (!is_zero(c)) out = out + TPoly::monomial(Rat(c), j - 1);
    }
    return out;
}

} // namespace mbh
