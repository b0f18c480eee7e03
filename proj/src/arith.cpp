#include "mbh/int_util.hpp"
#include "mbh/rat.hpp"

namespace mbh {

Int binom(long n, long k) {
    if (n < 0) throw BadArgument("binom with negative n = " + std::to_string(n));
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int catalan(long n) {
    if (n < 0) throw BadArgument("catalan with negative n");
    return divexact_checked(binom(2 * n, n), Int(n + 1));
}

long floor_div(long a, long b) {
    if (b <= 0) throw BadArgument("floor_div requires positive divisor");
    long q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

long choose2(long m) { return m * (m - 1) / 2; }

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int divexact_checked(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw ZeroDivide("integer division by zero");
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(rem) != 0)
        throw NotDivisible(a.get_str() + " not divisible by " + b.get_str());
    return q;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base.is_zero()) {
        if (e < 0) throw ZeroDivide("negative power of zero");
        return Rat(0);
    }
    Rat acc(1);
    Rat b = base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

} // namespace mbh
