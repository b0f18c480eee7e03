#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbh/errors.hpp"
#include "mbh/hankel.hpp"
#include "mbh/int_util.hpp"
#include "mbh/matrix.hpp"
#include "mbh/sequences.hpp"

using namespace mbh;

TEST_CASE("integer determinants at fixed spots") {
    CHECK(hankel_det_int(0, 2, 2) == Int(3));
    CHECK(hankel_det_int(0, 3, 2) == Int(-6));
    CHECK(hankel_det_int(0, 5, 0) == Int(1));
    CHECK(hankel_det_int(0, 0, 3) == Int(1));

    auto tab = det_table_int(1, 1, 5);
    REQUIRE(tab.size() == 6);
    long expect[] = {1, 1, 2, 1, 1, 0};
    for (long n = 0; n <= 5; ++n) CHECK(tab[n] == Int(expect[n]));
}

TEST_CASE("polynomial determinant essentials") {
    std::vector<TPoly> seq = {TPoly(1), TPoly(1), tpoly_from({1, 1})};
    auto m = hankel_matrix(seq, 0, 2);
    CHECK(det_bareiss(m) == TPoly::monomial(Rat(1), 1));
    CHECK(det_bareiss_serial(m) == TPoly::monomial(Rat(1), 1));

    CHECK(hankel_det_poly(Family::B, 0, 0) == TPoly(1));
    CHECK(hankel_det_poly(Family::B, 0, 2) == TPoly::monomial(Rat(1), 1));
}

TEST_CASE("row swap flips the sign") {
    auto seq = int_seq_table(0, 8);
    auto m = hankel_matrix(seq, 1, 3);
    Int d = det_bareiss(m);
    m.swap_rows(0, 1);
    CHECK(det_bareiss(m) == -d);
}

TEST_CASE("parallel elimination agrees with the serial one") {
    auto iseq = int_seq_table(2, 24);
    auto im = hankel_matrix(iseq, 1, 11);
    CHECK(det_bareiss(im) == det_bareiss_serial(im));

    auto pseq = poly_seq_table(Family::B, 16);
    auto pm = hankel_matrix(pseq, 1, 7);
    CHECK(det_bareiss(pm) == det_bareiss_serial(pm));
}

TEST_CASE("normalization by the step-weight power") {
    CHECK(norm_exponent(Family::Mid, 7) == 0);
    CHECK(norm_exponent(Family::A, 5) == 10);
    CHECK(norm_exponent(Family::B, 3) == 2);
    CHECK(norm_exponent(Family::B, 4) == 4);
    CHECK(norm_exponent(Family::C, 4) == 6);

    CHECK(normalized_det(Family::B, 2, 2) == tpoly_from({1, 1, 1}));
    CHECK(normalized_det(Family::A, 1, 2) == TPoly::monomial(Rat(-1), 1));
    CHECK(normalized_det(Family::C, 2, 1) == tpoly_from({1, 1}));

    // zeroth column normalizes to exactly 1
    auto nt = normalized_table(Family::B, 0, 6);
    for (long n = 0; n <= 6; ++n) CHECK(nt[n] == TPoly(1));

    for (long n = 0; n <= 6; ++n)
        CHECK(step_weight_product(Family::B, n) == TPoly::monomial(Rat(1), (n * n) / 4));
}

TEST_CASE("leading principal minors walk the table") {
    auto seq = int_seq_table(0, 12);
    auto m = hankel_matrix(seq, 0, 6);
    auto minors = leading_principal_minors(m);
    auto tab = det_table_int(0, 0, 6);
    REQUIRE(minors.size() == 6);
    for (long n = 1; n <= 6; ++n) CHECK(minors[n - 1] == tab[n]);

    // b(0) with one shift is 0, so the very first pivot dies
    auto z = hankel_matrix(int_seq_table(1, 10), 0, 3);
    CHECK_THROWS_AS(leading_principal_minors(z), ZeroPivot);
    try {
        leading_principal_minors(z);
    } catch (const ZeroPivot& e) {
        CHECK(e.step == 1);
    }
}

TEST_CASE("cofactor determinant as a cross-check") {
    auto pseq = poly_seq_table(Family::C, 10);
    auto pm = hankel_matrix(pseq, 1, 4);
    CHECK(naive_det(pm) == det_bareiss(pm));

    Mat<Int> big(7);
    CHECK_THROWS_AS(naive_det(big), TooLarge);
}

TEST_CASE("orthogonal polynomial companions") {
    XPoly p1 = orthopoly(Family::Mid, 1);
    CHECK(p1 == XPoly::from_coeffs({TPoly(-1), TPoly(1)}));
    for (long n = 0; n <= 6; ++n)
        CHECK(orthopoly_at0(Family::Mid, n) == TPoly(parity_sign(choose2(n + 1))));
}
