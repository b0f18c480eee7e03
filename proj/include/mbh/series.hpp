#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "mbh/errors.hpp"
#include "mbh/poly.hpp"

namespace mbh {

/* Sentinel for "all coefficients known" (polynomial data). Kept well below
   LONG_MAX so index arithmetic cannot overflow. */
inline constexpr long kOrderInf = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
    if (a >= kOrderInf || b >= kOrderInf) return kOrderInf;
    long s = a + b;
    return s >= kOrderInf ? kOrderInf : s;
}

template <class C>
struct DivOps; // exact coefficient division, specialized per ring

template <>
struct DivOps<Rat> {
    static Rat div(const Rat& a, const Rat& b) { return a / b; }
};

template <>
struct DivOps<TPoly> {
    static TPoly div(const TPoly& a, const TPoly& b) { return poly_exact_div(a, b); }
};

/* Truncated power series with explicit validity tracking. Either `exact` is
   set and the stored coefficients are the complete support (trailing zeros
   trimmed), or exactly order() == size() coefficients are known and nothing
   beyond them may be read. Every operation computes the order of its result
   from the orders and valuations of its inputs; no coefficient is ever
   fabricated. */
template <class C>
class Series {
  public:
    Series() : exact_(true) {} // exact zero

    static Series from_poly(const Poly<C>& p) {
        Series s;
        s.c_ = p.coeffs();
        s.exact_ = true;
        return s;
    }

    static Series from_coeffs(std::vector<C> cs) {
        Series s;
        s.c_ = std::move(cs);
        s.exact_ = false;
        return s;
    }

    long order() const { return exact_ ? kOrderInf : static_cast<long>(c_.size()); }
    bool exact() const { return exact_; }
    const std::vector<C>& known() const { return c_; }

    const C& coeff(long i) const {
        static const C zero{};
        if (i < 0) return zero;
        if (i < static_cast<long>(c_.size())) return c_[static_cast<size_t>(i)];
        if (exact_) return zero;
        throw OrderExhausted("coefficient " + std::to_string(i) + " beyond valid order " +
                             std::to_string(order()));
    }

    /* first stored nonzero index; when none is known, the best safe lower
       bound on the true valuation */
    long valuation_bound() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<long>(i);
        return exact_ ? kOrderInf : static_cast<long>(c_.size());
    }

    bool is_exact_zero() const { return exact_ && valuation_bound() == kOrderInf; }

    Series truncated(long n) const {
        if (n < 0) throw BadArgument("negative truncation length");
        if (!exact_ && n > order())
            throw OrderExhausted("truncation to " + std::to_string(n) + " beyond valid order " +
                                 std::to_string(order()));
        Series s;
        s.exact_ = false;
        s.c_.assign(static_cast<size_t>(n), C());
        for (long i = 0; i < n && i < static_cast<long>(c_.size()); ++i)
            s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return s;
    }

    Poly<C> poly_prefix(long upto) const {
        std::vector<C> cs;
        for (long i = 0; i <= upto; ++i) cs.push_back(coeff(i));
        return Poly<C>::from_coeffs(std::move(cs));
    }

    friend Series operator+(const Series& a, const Series& b) {
        return pointwise(a, b, false);
    }
    friend Series operator-(const Series& a, const Series& b) {
        return pointwise(a, b, true);
    }

    friend Series operator*(const Series& a, const Series& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return Series();
        long order = std::min(sat_add(a.order(), b.valuation_bound()),
                              sat_add(b.order(), a.valuation_bound()));
        Series r;
        if (order >= kOrderInf) { // both effectively polynomials
            r.exact_ = true;
            if (a.c_.empty() || b.c_.empty()) return r;
            r.c_.assign(a.c_.size() + b.c_.size() - 1, C());
        } else {
            r.exact_ = false;
            r.c_.assign(static_cast<size_t>(order), C());
        }
        long cap = static_cast<long>(r.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            long jmax = std::min<long>(static_cast<long>(b.c_.size()), cap - static_cast<long>(i));
            for (long j = 0; j < jmax; ++j) {
                if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
                r.c_[i + static_cast<size_t>(j)] += a.c_[i] * b.c_[static_cast<size_t>(j)];
            }
        }
        if (r.exact_)
            while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
        return r;
    }

  private:
    static Series pointwise(const Series& a, const Series& b, bool minus) {
        long order = std::min(a.order(), b.order());
        Series r;
        r.exact_ = order >= kOrderInf;
        size_t n = r.exact_ ? std::max(a.c_.size(), b.c_.size()) : static_cast<size_t>(order);
        r.c_.assign(n, C());
        for (size_t i = 0; i < n; ++i) {
            C v = (i < a.c_.size()) ? a.c_[i] : C();
            C w = (i < b.c_.size()) ? b.c_[i] : C();
            r.c_[i] = minus ? (v - w) : (v + w);
        }
        if (r.exact_)
            while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
        return r;
    }

    std::vector<C> c_;
    bool exact_;
};

using SeriesQ = Series<Rat>;
using SeriesT = Series<TPoly>;

template <class C>
Series<C> ser_mul(const Series<C>& a, const Series<C>& b) { return a * b; }

/* a / b where b has a nonzero known leading coefficient after its valuation
   shift. Each coefficient of the quotient is obtained by exact division by
   that leading coefficient (plain division over Rat, exact polynomial
   division over TPoly), so a divisor like 2t*(1+...) works over TPoly. */
template <class C>
Series<C> ser_div_exact(const Series<C>& a, const Series<C>& b) {
    if (b.is_exact_zero()) throw ZeroDivide("series division by zero");
    long v = b.valuation_bound();
    if (v == b.order() && !b.exact())
        throw OrderExhausted("divisor has no known nonzero coefficient");
    if (a.order() >= kOrderInf && b.order() >= kOrderInf)
        throw BadArgument("exact/exact series division: truncate first");
    long order = std::min(a.order(), b.order()) - v;
    if (order <= 0) throw OrderExhausted("no valid quotient coefficients");
    for (long i = 0; i < v; ++i)
        if (!a.coeff(i).is_zero())
            throw NotDivisible("numerator valuation below divisor valuation " + std::to_string(v));
    const C& lead = b.coeff(v);
    std::vector<C> q(static_cast<size_t>(order), C());
    for (long n = 0; n < order; ++n) {
        C acc = a.coeff(n + v);
        for (long j = 0; j < n; ++j) {
            if (q[static_cast<size_t>(j)].is_zero()) continue;
            acc -= q[static_cast<size_t>(j)] * b.coeff(v + n - j);
        }
        q[static_cast<size_t>(n)] = DivOps<C>::div(acc, lead);
    }
    return Series<C>::from_coeffs(std::move(q));
}

/* Square root with constant term 1. The input must be truncated (finite
   order); the result carries the same order. */
template <class C>
Series<C> ser_sqrt(const Series<C>& a) {
    if (a.order() >= kOrderInf)
        throw BadArgument("series sqrt needs a truncated input");
    long n = a.order();
    if (n == 0) return Series<C>::from_coeffs({});
    C one(1);
    if (!(a.coeff(0) == one)) throw BadConstantTerm("series sqrt requires constant term 1");
    std::vector<C> s(static_cast<size_t>(n), C());
    s[0] = one;
    C two(2);
    for (long k = 1; k < n; ++k) {
        C acc = a.coeff(k);
        for (long i = 1; i < k; ++i) {
            if (s[static_cast<size_t>(i)].is_zero()) continue;
            acc -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
        }
        s[static_cast<size_t>(k)] = DivOps<C>::div(acc, two);
    }
    return Series<C>::from_coeffs(std::move(s));
}

template <class C>
Series<C> ser_derivative(const Series<C>& a) {
    if (a.exact()) {
        std::vector<C> d;
        for (long i = 1; i < static_cast<long>(a.known().size()); ++i)
            d.push_back(a.known()[static_cast<size_t>(i)] * C(i));
        return Series<C>::from_poly(Poly<C>::from_coeffs(std::move(d)));
    }
    long n = a.order();
    std::vector<C> d;
    for (long i = 1; i < n; ++i) d.push_back(a.coeff(i) * C(i));
    return Series<C>::from_coeffs(std::move(d));
}

template <class C>
Series<C> ser_shift_up(const Series<C>& a, long m) {
    if (m < 0) throw NegativeExponent("series shift " + std::to_string(m));
    if (a.exact()) {
        Poly<C> p = Poly<C>::from_coeffs(a.known());
        return Series<C>::from_poly(p.shifted_up(m));
    }
    std::vector<C> c(static_cast<size_t>(m), C());
    c.insert(c.end(), a.known().begin(), a.known().end());
    return Series<C>::from_coeffs(std::move(c));
}

/* n valid coefficients of P/Q; requires val(P) >= val(Q) as power series. */
template <class C>
Series<C> ser_from_rational(const Poly<C>& p, const Poly<C>& q, long n) {
    if (q.is_zero()) throw ZeroDivide("rational series with zero denominator");
    long v = q.valuation();
    Series<C> sp = Series<C>::from_poly(p).truncated(n + v);
    Series<C> sq = Series<C>::from_poly(q).truncated(n + v);
    return ser_div_exact(sp, sq);
}

} // namespace mbh
