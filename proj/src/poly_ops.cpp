#include <cctype>

#include "mbh/poly.hpp"

namespace mbh {

TPoly tpoly_from(std::initializer_list<long> coeffs) {
    std::vector<Rat> cs;
    cs.reserve(coeffs.size());
    for (long v : coeffs) cs.emplace_back(v);
    return TPoly::from_coeffs(std::move(cs));
}

Poly<Rat> poly_exact_div(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (b.is_zero()) throw ZeroDivide("polynomial division by zero");
    if (a.is_zero()) return {};
    long da = a.degree(), db = b.degree();
    if (da < db)
        throw NotDivisible("degree " + std::to_string(da) + " below divisor degree " +
                           std::to_string(db));
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> q(static_cast<size_t>(da - db) + 1, Rat(0));
    const Rat& lead = b.coeff(db);
    for (long i = da - db; i >= 0; --i) {
        Rat c = rem[static_cast<size_t>(i + db)] / lead;
        if (!c.is_zero()) {
            for (long j = 0; j <= db; ++j)
                rem[static_cast<size_t>(i + j)] -= c * b.coeff(j);
        }
        q[static_cast<size_t>(i)] = std::move(c);
    }
    for (const Rat& r : rem)
        if (!r.is_zero())
            throw NotDivisible("nonzero remainder in exact polynomial division");
    return Poly<Rat>::from_coeffs(std::move(q));
}

bool is_palindromic(const Poly<Rat>& p) {
    long d = p.degree();
    for (long i = 0; 2 * i <= d; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

bool is_unimodal(const Poly<Rat>& p) {
    long d = p.degree();
    long i = 0;
    while (i < d && p.coeff(i) <= p.coeff(i + 1)) ++i;
    while (i < d && p.coeff(i) >= p.coeff(i + 1)) ++i;
    return i == d;
}

bool coeffs_positive(const Poly<Rat>& p) {
    if (p.is_zero()) return false;
    for (const Rat& c : p.coeffs())
        if (c.sign() <= 0) return false;
    return true;
}

bool coeffs_nonnegative(const Poly<Rat>& p) {
    for (const Rat& c : p.coeffs())
        if (c.sign() < 0) return false;
    return true;
}

std::vector<Rat> gamma_decompose(const Poly<Rat>& p) {
    if (p.is_zero()) return {};
    if (!is_palindromic(p)) throw NotPalindromic("gamma basis requires a palindromic polynomial");
    long d = p.degree();
    Poly<Rat> rest = p;
    std::vector<Rat> gamma;
    Poly<Rat> one_plus_x = Poly<Rat>::from_coeffs({Rat(1), Rat(1)});
    for (long j = 0; 2 * j <= d; ++j) {
        Rat g = rest.coeff(j);
        gamma.push_back(g);
        if (!g.is_zero()) {
            Poly<Rat> basis(1);
            for (long i = 0; i < d - 2 * j; ++i) basis *= one_plus_x;
            rest -= basis.shifted_up(j).scaled(g);
        }
    }
    if (!rest.is_zero()) throw NotPalindromic("gamma expansion left a nonzero remainder");
    return gamma;
}

Poly<Rat> gamma_recompose(const std::vector<Rat>& gamma, long d) {
    Poly<Rat> one_plus_x = Poly<Rat>::from_coeffs({Rat(1), Rat(1)});
    Poly<Rat> acc;
    for (size_t j = 0; j < gamma.size(); ++j) {
        long rest = d - 2 * static_cast<long>(j);
        if (rest < 0) throw BadArgument("gamma vector longer than degree allows");
        Poly<Rat> basis(1);
        for (long i = 0; i < rest; ++i) basis *= one_plus_x;
        acc += basis.shifted_up(static_cast<long>(j)).scaled(gamma[j]);
    }
    return acc;
}

Poly<Rat> taylor_shift(const Poly<Rat>& p, const Rat& a) {
    Poly<Rat> acc;
    Poly<Rat> x_plus_a = Poly<Rat>::from_coeffs({a, Rat(1)});
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x_plus_a;
        acc += Poly<Rat>(p.coeff(i));
    }
    return acc;
}

XPoly twisted_reverse(const XPoly& p, long xdeg, long tpow, long tweight) {
    if (xdeg < p.degree()) throw BadArgument("twisted_reverse x-degree below actual degree");
    std::vector<TPoly> out(static_cast<size_t>(xdeg) + 1, TPoly());
    for (long i = 0; i <= p.degree(); ++i) {
        const TPoly& q = p.coeff(i);
        if (q.is_zero()) continue;
        long shift = tpow - tweight * i;
        TPoly moved;
        if (shift >= 0) {
            moved = q.shifted_up(shift);
        } else {
            moved = tpow_div(q, -shift); // throws NotDivisible -> caller decides
        }
        out[static_cast<size_t>(xdeg - i)] = std::move(moved);
    }
    return XPoly::from_coeffs(std::move(out));
}

XPoly bivariate_reverse(const XPoly& p, long xdeg, long tpow) {
    if (xdeg < p.degree()) throw BadArgument("bivariate_reverse x-degree below actual degree");
    std::vector<TPoly> out(static_cast<size_t>(xdeg) + 1, TPoly());
    for (long i = 0; i <= p.degree(); ++i) {
        const TPoly& q = p.coeff(i);
        if (q.is_zero()) continue;
        if (q.degree() > tpow)
            throw NegativeExponent("t-degree exceeds reversal power " + std::to_string(tpow));
        out[static_cast<size_t>(xdeg - i)] = reverse_poly(q, tpow);
    }
    return XPoly::from_coeffs(std::move(out));
}

long xpoly_tdegree(const XPoly& p) {
    long d = -1;
    for (long i = 0; i <= p.degree(); ++i) d = std::max(d, p.coeff(i).degree());
    return d;
}

namespace {

void append_term(std::string& out, const Rat& c, long e, const char* var, bool first) {
    Rat a = c.abs();
    if (first) {
        if (c.is_negative()) out += "-";
    } else {
        out += c.is_negative() ? "-" : "+";
    }
    out += a.str();
    if (e > 0) {
        out += "*";
        out += var;
        out += "^";
        out += std::to_string(e);
    }
}

} // namespace

std::string render(const TPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long e = 0; e <= p.degree(); ++e) {
        const Rat& c = p.coeff(e);
        if (c.is_zero()) continue;
        append_term(out, c, e, var, first);
        first = false;
    }
    return out;
}

std::string render(const XPoly& p, const char* xvar, const char* tvar) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long e = 0; e <= p.degree(); ++e) {
        const TPoly& c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!first) out += "+";
        out += "(";
        out += render(c, tvar);
        out += ")*";
        out += xvar;
        out += "^";
        out += std::to_string(e);
        first = false;
    }
    return out;
}

/* Accepts exactly what render(TPoly) produces: terms "c" or "c*t^e" joined by
   the sign of the following coefficient, e.g. "1-3*t^2+2/3*t^4". */
Poly<Rat> parse_tpoly(const std::string& s) {
    if (s == "0") return {};
    Poly<Rat> acc;
    size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (!first || s[i] == '-' || s[i] == '+') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw ParseError("expected sign at position " + std::to_string(i));
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        if (j == i) throw ParseError("expected coefficient at position " + std::to_string(i));
        std::string coef = s.substr(i, j - i);
        Rat c;
        size_t slash = coef.find('/');
        if (slash == std::string::npos) {
            c = Rat(Int(coef));
        } else {
            c = Rat(Int(coef.substr(0, slash)), Int(coef.substr(slash + 1)));
        }
        if (sign < 0) c = -c;
        long e = 0;
        i = j;
        if (i < s.size() && s[i] == '*') {
            ++i;
            size_t v = i;
            while (v < s.size() && s[v] != '^') ++v;
            if (v >= s.size()) throw ParseError("missing exponent marker");
            i = v + 1;
            size_t d = i;
            while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
            if (d == i) throw ParseError("missing exponent digits");
            e = std::stol(s.substr(i, d - i));
            i = d;
        }
        acc.set_coeff(e, acc.coeff(e) + c);
        first = false;
    }
    return acc;
}

} // namespace mbh
