#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbh/errors.hpp"
#include "mbh/int_util.hpp"
#include "mbh/poly.hpp"
#include "mbh/rat.hpp"

using namespace mbh;

TEST_CASE("binomials and integer helpers") {
    CHECK(binom(4, 2) == Int(6));
    CHECK(binom(10, 3) == Int(120));
    CHECK(binom(7, 0) == Int(1));
    CHECK(binom(3, 5) == Int(0));
    CHECK(binom(5, -1) == Int(0));
    CHECK_THROWS_AS(binom(-1, 0), BadArgument);

    long cat[] = {1, 1, 2, 5, 14, 42, 132};
    for (long n = 0; n <= 6; ++n) CHECK(catalan(n) == Int(cat[n]));

    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-6, 3) == -2);
    CHECK_THROWS_AS(floor_div(6, -4), BadArgument);

    // choose2 extends m(m-1)/2 to negative m; both eq97 sign laws rely on it.
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(2) == 1);
    CHECK(choose2(5) == 10);
    CHECK(choose2(-1) == 1);
    CHECK(choose2(-2) == 3);

    CHECK(parity_sign(0) == 1);
    CHECK(parity_sign(3) == -1);
    CHECK(parity_sign(-2) == 1);

    CHECK(int_pow(Int(2), 10) == Int(1024));
    CHECK(int_pow(Int(-3), 3) == Int(-27));
    CHECK(int_pow(Int(5), 0) == Int(1));

    CHECK(divexact_checked(Int(84), Int(7)) == Int(12));
    CHECK_THROWS_AS(divexact_checked(Int(7), Int(3)), NotDivisible);
    CHECK_THROWS_AS(divexact_checked(Int(7), Int(0)), ZeroDivide);
}

TEST_CASE("rationals stay canonical") {
    CHECK(Rat::of(2, 4) == Rat::of(1, 2));
    CHECK(Rat(Int(3), Int(-6)) == Rat::of(-1, 2));
    CHECK((Rat::of(1, 2) + Rat::of(1, 3)).str() == "5/6");
    CHECK((Rat::of(3, 4) * Rat::of(2, 3)) == Rat::of(1, 2));
    CHECK((Rat::of(1, 2) - Rat::of(1, 2)).is_zero());
    CHECK(Rat(Int(10)).is_integer());
    CHECK(Rat::of(-9, 3).to_int() == Int(-3));
    CHECK_THROWS_AS(Rat::of(1, 3).to_int(), BadArgument);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), ZeroDivide);
    CHECK(Rat::of(-2, 7).sign() == -1);
    CHECK(Rat::of(-2, 7).abs() == Rat::of(2, 7));
    CHECK(Rat::of(5, 1).str() == "5");
}

TEST_CASE("polynomial basics") {
    TPoly p = tpoly_from({1, 2, 1});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1) == Rat(2));
    CHECK(p.coeff(9) == Rat(0));
    CHECK(TPoly().degree() == -1);
    CHECK(TPoly().is_zero());
    CHECK(TPoly().valuation() == -1);
    CHECK(tpoly_from({0, 0, 3}).valuation() == 2);

    CHECK_THROWS_AS(TPoly::monomial(Rat(1), -1), NegativeExponent);

    CHECK(p.eval(Rat(3)) == Rat(16));
    CHECK(p == tpoly_from({1, 1}) * tpoly_from({1, 1}));
    CHECK(p - tpoly_from({1, 2}) == TPoly::monomial(Rat(1), 2));
    CHECK(p.shifted_up(2) == tpoly_from({0, 0, 1, 2, 1}));
    CHECK(p.scaled(Rat::of(1, 2)) == tpoly_from({1, 2, 1}) * TPoly(Rat::of(1, 2)));
    CHECK(-p + p == TPoly());

    CHECK(poly_pow(tpoly_from({1, 1}), 3) == tpoly_from({1, 3, 3, 1}));
    CHECK(poly_pow(p, 0) == TPoly(1));

    CHECK(neg_x(tpoly_from({1, 2, 3})) == tpoly_from({1, -2, 3}));

    CHECK(poly_exact_div(tpoly_from({1, 0, -1}), tpoly_from({1, 1})) == tpoly_from({1, -1}));
    CHECK_THROWS_AS(poly_exact_div(tpoly_from({1, 0, 1}), tpoly_from({1, 1})), NotDivisible);
    CHECK_THROWS_AS(poly_exact_div(p, TPoly()), ZeroDivide);

    CHECK(tpow_div(tpoly_from({0, 0, 2, 4}), 2) == tpoly_from({2, 4}));
    CHECK_THROWS_AS(tpow_div(tpoly_from({1, 1}), 1), NotDivisible);
}

TEST_CASE("reversal and shape predicates") {
    TPoly p = tpoly_from({1, 3, 1});
    CHECK(reverse_poly(p, 2) == p);
    CHECK(is_palindromic(p));
    CHECK_FALSE(is_palindromic(tpoly_from({1, 2})));
    CHECK(reverse_poly(tpoly_from({1, 2}), 3) == tpoly_from({0, 0, 2, 1}));
    CHECK_THROWS_AS(reverse_poly(p, 1), BadArgument);

    CHECK(is_unimodal(tpoly_from({1, 4, 6, 4, 1})));
    CHECK_FALSE(is_unimodal(tpoly_from({1, 0, 2})));
    CHECK(coeffs_positive(tpoly_from({2, 1})));
    CHECK_FALSE(coeffs_positive(tpoly_from({2, 0, 1})));
    CHECK(coeffs_nonnegative(tpoly_from({2, 0, 1})));
    CHECK_FALSE(coeffs_nonnegative(tpoly_from({2, -1})));
}

TEST_CASE("gamma basis round trip") {
    // 1 + 3x + x^2 = gamma_0 (x(1+x))^0 (1+x)^2 + gamma_1 x with gamma = (1, 1)
    TPoly g = tpoly_from({1, 3, 1});
    auto gam = gamma_decompose(g);
    REQUIRE(gam.size() == 2);
    CHECK(gam[0] == Rat(1));
    CHECK(gam[1] == Rat(1));
    CHECK(gamma_recompose(gam, 2) == g);

    auto gam2 = gamma_decompose(tpoly_from({1, 10, 20, 10, 1}));
    REQUIRE(gam2.size() == 3);
    CHECK(gam2[0] == Rat(1));
    CHECK(gam2[1] == Rat(6));
    CHECK(gam2[2] == Rat(2));
    CHECK_THROWS_AS(gamma_decompose(tpoly_from({1, 2})), NotPalindromic);
}

TEST_CASE("taylor shift") {
    TPoly sq = tpoly_from({1, 2, 1});     // (1+t)^2
    CHECK(taylor_shift(sq, Rat(-1)) == TPoly::monomial(Rat(1), 2));
    CHECK(taylor_shift(sq, Rat(0)) == sq);
    CHECK(taylor_shift(tpoly_from({0, 1}), Rat(5)) == tpoly_from({5, 1}));
}

TEST_CASE("bivariate reversal") {
    TPoly one(1), t = TPoly::monomial(Rat(1), 1);
    XPoly p = XPoly::from_coeffs({one, t});          // 1 + t x
    CHECK(bivariate_reverse(p, 1, 1) == p);
    CHECK(twisted_reverse(p, 1, 1, 1) == XPoly::from_coeffs({t, t}));
    CHECK(xpoly_tdegree(p) == 1);

    XPoly q = XPoly::from_coeffs({one, one + t});    // 1 + (1+t) x
    // x-degree 1, t-degree 1 reversal swaps the corners
    CHECK(bivariate_reverse(q, 1, 1) == XPoly::from_coeffs({one + t, t}));
}

TEST_CASE("canonical rendering round trips") {
    TPoly p = tpoly_from({1, 0, -3}) + TPoly::monomial(Rat::of(2, 3), 4);
    CHECK(render(p) == "1-3*t^2+2/3*t^4");
    CHECK(parse_tpoly(render(p)) == p);

    CHECK(render(TPoly()) == "0");
    CHECK(parse_tpoly("0") == TPoly());
    CHECK(render(tpoly_from({1, 1})) == "1+1*t^1");
    CHECK(render(tpoly_from({0, -2})) == "-2*t^1");
    CHECK(parse_tpoly("-2*t^1") == tpoly_from({0, -2}));
    CHECK_THROWS_AS(parse_tpoly("2t"), ParseError);

    TPoly one(1), t = TPoly::monomial(Rat(1), 1);
    XPoly x = XPoly::from_coeffs({one, one + t});
    CHECK(render(x) == "(1)*x^0+(1+1*t^1)*x^1");
}
