#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbh/errors.hpp"
#include "mbh/rat.hpp"

namespace mbh {

/* Dense univariate polynomial over an exact coefficient ring C.
   Invariant: no trailing zero coefficients; the zero polynomial is the empty
   vector and reports degree() == -1. */
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(long v) {
        C c(v);
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(C v) {
        if (!v.is_zero()) c_.push_back(std::move(v));
    }

    static Poly from_coeffs(std::vector<C> cs) {
        Poly p;
        p.c_ = std::move(cs);
        p.trim();
        return p;
    }

    static Poly monomial(C coeff, long e) {
        if (e < 0) throw NegativeExponent("monomial exponent " + std::to_string(e));
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.assign(static_cast<size_t>(e) + 1, C());
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const C& coeff(long i) const {
        static const C zero{};
        if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<C>& coeffs() const { return c_; }

    void set_coeff(long i, C v) {
        if (i < 0) throw NegativeExponent("coefficient index " + std::to_string(i));
        if (i >= static_cast<long>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(static_cast<size_t>(i) + 1, C());
        }
        c_[static_cast<size_t>(i)] = std::move(v);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Poly p;
        p.c_ = std::move(r);
        p.trim(); // cancellation cannot occur in the top product term, but stay safe
        return p;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const C& k) const {
        if (k.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }

    /* multiply by x^e */
    Poly shifted_up(long e) const {
        if (e < 0) throw NegativeExponent("shift exponent " + std::to_string(e));
        if (is_zero() || e == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(e), C());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(e)] = c_[i];
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /* Horner evaluation at a value of the coefficient ring. */
    C eval(const C& x) const {
        C acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /* index of the lowest nonzero coefficient; -1 for the zero polynomial */
    long valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<long>(i);
        return -1;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

/* Polynomials in t over the rationals; the same dense type doubles for
   polynomials in x over the rationals (variable names only matter when
   rendering). XPoly is a polynomial in x whose coefficients are TPoly. */
using TPoly = Poly<Rat>;
using QXPoly = Poly<Rat>;
using XPoly = Poly<TPoly>;

template <class C>
bool is_zero(const Poly<C>& p) { return p.is_zero(); }

TPoly tpoly_from(std::initializer_list<long> coeffs);

/* Exact long division over Rat coefficients; nonzero remainder throws. */
Poly<Rat> poly_exact_div(const Poly<Rat>& a, const Poly<Rat>& b);

/* Divide by t^e; nonzero low-order coefficients throw NotDivisible. */
template <class C>
Poly<C> tpow_div(const Poly<C>& p, long e) {
    if (e < 0) throw NegativeExponent("tpow_div exponent " + std::to_string(e));
    if (p.is_zero()) return p;
    if (p.valuation() < e)
        throw NotDivisible("valuation " + std::to_string(p.valuation()) +
                           " below requested power " + std::to_string(e));
    std::vector<C> cs(p.coeffs().begin() + e, p.coeffs().end());
    return Poly<C>::from_coeffs(std::move(cs));
}

/* t^d * p(1/t) laid out to declared degree d (d >= deg p). */
template <class C>
Poly<C> reverse_poly(const Poly<C>& p, long d) {
    if (d < p.degree()) throw BadArgument("reverse degree below actual degree");
    std::vector<C> cs(static_cast<size_t>(d) + 1, C());
    for (long i = 0; i <= p.degree(); ++i) cs[static_cast<size_t>(d - i)] = p.coeff(i);
    return Poly<C>::from_coeffs(std::move(cs));
}

template <class C>
Poly<C> neg_x(const Poly<C>& p) {
    std::vector<C> cs(p.coeffs());
    for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
    return Poly<C>::from_coeffs(std::move(cs));
}

template <class C>
Poly<C> poly_pow(const Poly<C>& p, long e) {
    if (e < 0) throw NegativeExponent("poly_pow exponent " + std::to_string(e));
    Poly<C> acc(1);
    Poly<C> base = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool is_palindromic(const Poly<Rat>& p);
bool is_unimodal(const Poly<Rat>& p);
bool coeffs_positive(const Poly<Rat>& p);
bool coeffs_nonnegative(const Poly<Rat>& p);

/* Expansion of a palindromic p of degree d in the basis x^j (1+x)^(d-2j):
   p = sum_j gamma_j x^j (1+x)^(d-2j), j = 0..floor(d/2). */
std::vector<Rat> gamma_decompose(const Poly<Rat>& p);
Poly<Rat> gamma_recompose(const std::vector<Rat>& gamma, long d);

/* p(x + a) by repeated multiplication with (x + a). */
Poly<Rat> taylor_shift(const Poly<Rat>& p, const Rat& a);

/* x^xdeg * t^tpow * p(1/(t^tweight * x), t): the x-reversal with a t-power
   twist used by the generating-function symmetry claims. Coefficient of x^i
   lands on x^(xdeg-i) multiplied by t^(tpow - tweight*i); a negative power of
   t anywhere is an error. */
XPoly twisted_reverse(const XPoly& p, long xdeg, long tpow, long tweight);

/* x^xdeg * t^tpow * p(1/x, 1/t): both variables inverted. */
XPoly bivariate_reverse(const XPoly& p, long xdeg, long tpow);

long xpoly_tdegree(const XPoly& p);

std::string render(const TPoly& p, const char* var = "t");
std::string render(const XPoly& p, const char* xvar = "x", const char* tvar = "t");

/* Inverse of render(TPoly): accepts exactly the canonical form. */
Poly<Rat> parse_tpoly(const std::string& s);

} // namespace mbh
