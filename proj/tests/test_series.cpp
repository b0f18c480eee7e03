#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbh/errors.hpp"
#include "mbh/poly.hpp"
#include "mbh/series.hpp"

using namespace mbh;

namespace {
QXPoly qx(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QXPoly::from_coeffs(v);
}
}

TEST_CASE("exact polynomials as series") {
    SeriesQ s = SeriesQ::from_poly(qx({1, 0, -4}));
    CHECK(s.exact());
    CHECK(s.coeff(2) == Rat(-4));
    CHECK(s.coeff(100) == Rat(0));
    CHECK(s.valuation_bound() == 0);
    CHECK_FALSE(s.is_exact_zero());
    CHECK(SeriesQ().is_exact_zero());

    SeriesQ tr = s.truncated(5);
    CHECK_FALSE(tr.exact());
    CHECK(tr.order() == 5);
    CHECK(tr.known().size() == 5);
    CHECK_THROWS_AS(tr.coeff(7), OrderExhausted);
    CHECK(tr.poly_prefix(4) == qx({1, 0, -4}));
}

TEST_CASE("arithmetic tracks truncation order") {
    SeriesQ a = SeriesQ::from_poly(qx({1, 1})).truncated(6);
    SeriesQ b = SeriesQ::from_poly(qx({1, -1}));
    SeriesQ p = a * b;
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(p.coeff(2) == Rat(-1));
    CHECK_FALSE(p.exact());
    CHECK((a + b).coeff(0) == Rat(2));
    CHECK((a - b).coeff(1) == Rat(2));
}

TEST_CASE("square root of 1 - 4x") {
    SeriesQ s = ser_sqrt(SeriesQ::from_poly(qx({1, -4})).truncated(10));
    long expect[] = {1, -2, -2, -4, -10, -28, -84, -264};
    for (long n = 0; n <= 7; ++n) CHECK(s.coeff(n) == Rat(expect[n]));

    SeriesQ sq = s * s;
    CHECK(sq.coeff(0) == Rat(1));
    CHECK(sq.coeff(1) == Rat(-4));
    for (long n = 2; n <= 8; ++n) CHECK(sq.coeff(n) == Rat(0));

    CHECK_THROWS_AS(ser_sqrt(SeriesQ::from_poly(qx({2, 1})).truncated(4)), BadConstantTerm);
}

TEST_CASE("rational expansion and exact division") {
    SeriesQ geo = ser_from_rational(qx({1}), qx({1, -1}), 6);
    for (long n = 0; n <= 5; ++n) CHECK(geo.coeff(n) == Rat(1));
    CHECK_THROWS_AS(geo.coeff(6), OrderExhausted);

    // shared valuation cancels, bare 1/x does not expand
    SeriesQ v = ser_from_rational(qx({0, 1}), qx({0, 1, -1}), 5);
    for (long n = 0; n <= 4; ++n) CHECK(v.coeff(n) == Rat(1));
    CHECK_THROWS_AS(ser_from_rational(qx({1}), qx({0, 1}), 5), NotDivisible);
    CHECK_THROWS_AS(ser_from_rational(qx({1}), qx({}), 5), ZeroDivide);

    SeriesQ q = ser_div_exact(SeriesQ::from_poly(qx({1, 0, -1})), SeriesQ::from_poly(qx({1, 1})).truncated(8));
    CHECK(q.coeff(0) == Rat(1));
    CHECK(q.coeff(1) == Rat(-1));
    CHECK(q.coeff(2) == Rat(0));
}

TEST_CASE("derivative and shift") {
    SeriesQ s = SeriesQ::from_poly(qx({5, 3, 0, 2}));
    SeriesQ d = ser_derivative(s);
    CHECK(d.coeff(0) == Rat(3));
    CHECK(d.coeff(2) == Rat(6));
    SeriesQ u = ser_shift_up(s, 2);
    CHECK(u.coeff(0) == Rat(0));
    CHECK(u.coeff(2) == Rat(5));
    CHECK(u.coeff(5) == Rat(2));
}

TEST_CASE("series over polynomial coefficients") {
    TPoly one(1), t = TPoly::monomial(Rat(1), 1);
    XPoly num = XPoly::from_coeffs({one});
    XPoly den = XPoly::from_coeffs({one, -t});
    SeriesT s = ser_from_rational(num, den, 6);
    for (long n = 0; n <= 5; ++n) CHECK(s.coeff(n) == TPoly::monomial(Rat(1), n));
}
