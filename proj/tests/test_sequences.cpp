#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbh/errors.hpp"
#include "mbh/sequences.hpp"
#include "mbh/weights.hpp"

using namespace mbh;

TEST_CASE("middle binomial values") {
    long head[] = {1, 1, 2, 3, 6, 10, 20, 35, 70, 126};
    for (long n = 0; n <= 9; ++n) CHECK(middle_binom(n) == Int(head[n]));
    CHECK(middle_binom(20) == Int(184756));
}

TEST_CASE("shifted variants") {
    for (long n = 0; n <= 12; ++n) CHECK(shifted_middle(n, 0) == middle_binom(n));

    long r1[] = {0, 1, 1, 3, 4, 10, 15, 35, 56, 126, 210};
    for (long n = 0; n <= 10; ++n) CHECK(shifted_middle(n, 1) == Int(r1[n]));

    long r2[] = {0, 0, 1, 1, 4, 5, 15, 21};
    for (long n = 0; n <= 7; ++n) CHECK(shifted_middle(n, 2) == Int(r2[n]));

    CHECK(shifted_middle(0, 5) == Int(0));
    CHECK(shifted_middle(5, 5) == Int(1));
}

TEST_CASE("family names") {
    CHECK(family_from_string("mid") == Family::Mid);
    CHECK(family_from_string("a") == Family::A);
    CHECK(family_from_string("b") == Family::B);
    CHECK(family_from_string("c") == Family::C);
    for (Family f : {Family::Mid, Family::A, Family::B, Family::C})
        CHECK(family_from_string(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_string("zzz"), BadArgument);
}

TEST_CASE("small family polynomials") {
    CHECK(b_poly(0) == TPoly(1));
    CHECK(b_poly(1) == TPoly(1));
    CHECK(b_poly(2) == tpoly_from({1, 1}));
    CHECK(b_poly(3) == tpoly_from({1, 2}));
    CHECK(b_poly(4) == tpoly_from({1, 4, 1}));

    CHECK(a_poly(2) == tpoly_from({1, 1}));
    CHECK(a_poly(4) == tpoly_from({1, 3, 2}));

    CHECK(c_poly(2) == tpoly_from({1, 1}));
    CHECK(c_poly(3) == tpoly_from({1, 1, 1}));
}

TEST_CASE("moments match brute-force path enumeration") {
    for (Family f : {Family::Mid, Family::A, Family::B, Family::C}) {
        auto tab = moment_table(f, 7);
        REQUIRE(tab.size() == 8);
        for (long n = 0; n <= 7; ++n) {
            CHECK(tab[n] == brute_paths(f, n));
            CHECK(tab[n] == moment(f, n));
        }
    }
}

TEST_CASE("middle-binomial family is constant in t") {
    for (long n = 0; n <= 8; ++n) {
        TPoly m = moment(Family::Mid, n);
        CHECK(m.degree() <= 0);
        CHECK(m.coeff(0) == Rat(middle_binom(n)));
    }
}

TEST_CASE("every family evaluates to the middle binomials at t = 1") {
    for (long n = 0; n <= 8; ++n) {
        Rat target{middle_binom(n)};
        CHECK(a_poly(n).eval(Rat(1)) == target);
        CHECK(b_poly(n).eval(Rat(1)) == target);
        CHECK(c_poly(n).eval(Rat(1)) == target);
    }
}

TEST_CASE("third family at t = -1 collapses to Catalan numbers") {
    for (long n = 0; n <= 8; ++n) {
        CHECK(c_poly(2 * n + 1).eval(Rat(-1)) == Rat(catalan(n)));
        CHECK(c_poly(2 * n).eval(Rat(-1)) == Rat(n == 0 ? 1 : 0));
    }
}

TEST_CASE("weight tables drive the recurrences") {
    WeightSpec wb = weights_for(Family::B);
    CHECK(wb.s(0) == TPoly(1));
    CHECK(wb.s(1) == TPoly());
    CHECK(wb.t(0) == TPoly::monomial(Rat(1), 1));
    CHECK(wb.t(1) == TPoly(1));
    WeightSpec wc = weights_for(Family::C);
    CHECK(wc.s(0) == TPoly(1));
    CHECK(wc.s(1) == tpoly_from({-1, 1}));
    CHECK(wc.s(2) == tpoly_from({1, -1}));
    CHECK(wc.t(3) == TPoly::monomial(Rat(1), 1));
}
