#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mbh/checks.hpp"
#include "mbh/errors.hpp"
#include "mbh/genfun.hpp"
#include "mbh/hankel.hpp"
#include "mbh/int_util.hpp"

using namespace mbh;

TEST_CASE("denominator expansion") {
    DenomSpec d = {{-1, 0, 1, 1}, {-1, 1, 1, 1}};     // (1-x)(1-tx)
    CHECK(denom_xdegree(d) == 2);
    XPoly e = denom_expand(d);
    TPoly one(1), t = TPoly::monomial(Rat(1), 1);
    CHECK(e == XPoly::from_coeffs({one, -(one + t), t}));
    CHECK(denom_render(d).find("x") != std::string::npos);
}

TEST_CASE("generating function structure accepts the true numerator") {
    // second B-column / (1-x)(1-tx) telescopes to the constant numerator 1
    auto terms = normalized_table(Family::B, 2, 12);
    DenomSpec d = {{-1, 0, 1, 1}, {-1, 1, 1, 1}};
    GenfunResult g = genfun_structure(terms, d, 0, 6);
    CHECK(g.pass);
    CHECK(g.bad_indices.empty());
    CHECK(g.numerator == XPoly::from_coeffs({TPoly(1)}));

    // and rejects a denominator that is too small
    DenomSpec wrong = {{-1, 0, 1, 2}};                // (1-x)^2
    GenfunResult w = genfun_structure(terms, wrong, 0, 6);
    CHECK_FALSE(w.pass);
    CHECK_FALSE(w.bad_indices.empty());
}

TEST_CASE("fourth B-column has numerator 1 + tx") {
    auto terms = normalized_table(Family::B, 4, 14);
    DenomSpec d = {{-1, 0, 1, 1}, {-1, 1, 1, 3}, {-1, 2, 1, 1}};
    GenfunResult g = genfun_structure(terms, d, 1, 5);
    CHECK(g.pass);
    TPoly one(1), t = TPoly::monomial(Rat(1), 1);
    CHECK(g.numerator == XPoly::from_coeffs({one, t}));
}

TEST_CASE("first middle-binomial column generates (1+x)/(1+x^2)") {
    auto ints = det_table_int(0, 1, 12);
    std::vector<TPoly> terms;
    for (const Int& v : ints) terms.emplace_back(Rat(v));
    DenomSpec d = {{+1, 0, 2, 1}};                    // 1 + x^2
    GenfunResult g = genfun_structure(terms, d, 1, 5);
    CHECK(g.pass);
    CHECK(g.numerator == XPoly::from_coeffs({TPoly(1), TPoly(1)}));
}

TEST_CASE("too few terms is an error, not a pass") {
    std::vector<TPoly> short_terms = {TPoly(1), TPoly(1)};
    DenomSpec d = {{-1, 0, 1, 1}};
    CHECK_THROWS_AS(genfun_structure(short_terms, d, 1, 5), InsufficientTerms);
}

TEST_CASE("window decomposition of cleared products") {
    TPoly p = tpoly_from({1, 2, 0, 0, 0, 3, 4, 0, 0, 5});
    BlockResult r = block_decompose(p, TPoly(1), {0, 5, 9}, {1, 1, 0});
    REQUIRE(r.status == BlockResult::Status::ok);
    REQUIRE(r.blocks.size() == 3);
    CHECK(r.blocks[0] == tpoly_from({1, 2}));
    CHECK(r.blocks[1] == tpoly_from({3, 4}));
    CHECK(r.blocks[2] == tpoly_from({5}));
    CHECK(r.stray.empty());

    // multiplication by the clearing factor happens inside
    TPoly d2 = tpoly_from({1, 1, 1});                 // 1-t^3 after clearing
    BlockResult c = block_decompose(d2, tpoly_from({1, -1}), {0, 3}, {0, 0});
    REQUIRE(c.status == BlockResult::Status::ok);
    CHECK(c.blocks[0] == TPoly(1));
    CHECK(c.blocks[1] == TPoly(-1));

    BlockResult o = block_decompose(p, TPoly(1), {0, 2}, {3, 1});
    CHECK(o.status == BlockResult::Status::overlap);

    BlockResult u = block_decompose(p, TPoly(1), {0, 5}, {1, 1});
    CHECK(u.status == BlockResult::Status::uncovered);
    CHECK(std::find(u.stray.begin(), u.stray.end(), 9) != u.stray.end());
}

TEST_CASE("check id matching walks dotted segments") {
    CHECK(id_matches("sec3.theorem1", "theorem1"));
    CHECK(id_matches("sec3.theorem1", "sec3"));
    CHECK(id_matches("sec3.theorem1", "sec3.theorem1"));
    CHECK(id_matches("sec4.eq52_audit", "eq52_audit"));
    CHECK(id_matches("core.det_vs_naive", "det_vs_naive"));
    CHECK_FALSE(id_matches("sec3.theorem1", "orem1"));
    CHECK_FALSE(id_matches("sec3.theorem1", "sec4"));
    CHECK_FALSE(id_matches("sec3.theorem1", "theorem"));
}

TEST_CASE("registry ids are unique and well formed") {
    auto& reg = check_registry();
    CHECK(reg.size() >= 40);
    std::vector<std::string> ids;
    for (const auto& def : reg) {
        CHECK_FALSE(def.id.empty());
        CHECK(def.id.find('.') != std::string::npos);
        ids.push_back(def.id);
    }
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("running a filtered selection") {
    RunConfig cfg;
    cfg.n_max = 6;
    auto reports = run_checks(cfg, {"core.sequence_forms"});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == "core.sequence_forms");
    CHECK(reports[0].status == "pass");

    CHECK(run_checks(cfg, {"no.such.check"}).empty());
}

TEST_CASE("config accessors fall back to per-check defaults") {
    RunConfig cfg;
    CHECK(cfg.kmax(5) == 5);
    CHECK(cfg.nmax(12) == 12);
    cfg.k_max = 3;
    cfg.n_max = 9;
    cfg.r_max = 2;
    cfg.N = 25;
    cfg.periods = 1;
    CHECK(cfg.kmax(5) == 3);
    CHECK(cfg.nmax(12) == 9);
    CHECK(cfg.rmax(4) == 2);
    CHECK(cfg.window(40) == 25);
    CHECK(cfg.period_count(2) == 1);
}
