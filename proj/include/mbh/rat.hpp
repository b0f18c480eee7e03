#pragma once

#include <gmpxx.h>

#include <string>

#include "mbh/errors.hpp"
#include "mbh/int_util.hpp"

namespace mbh {

/* Exact rational, always in lowest terms with positive denominator. The
   invariant is established on construction; mpq arithmetic preserves it. */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                      // NOLINT: implicit by design
    Rat(const Int& n) : v_(n) {}                // NOLINT
    Rat(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw ZeroDivide("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    static Rat of(long num, long den) { return Rat(Int(num), Int(den)); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Int to_int() const {
        if (!is_integer()) throw BadArgument("rational " + str() + " is not an integer");
        return v_.get_num();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ZeroDivide("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return is_negative() ? -*this : *this; }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline bool is_zero(const Rat& v) { return v.is_zero(); }
inline std::string render(const Rat& v) { return v.str(); }

Rat rat_pow(const Rat& base, long e); // e < 0 allowed for nonzero base

} // namespace mbh
