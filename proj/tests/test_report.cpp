#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "mbh/report.hpp"

using namespace mbh;

TEST_CASE("checker verdicts") {
    Checker ok("x.good", "n=3");
    ok.expect("n=0", "1", "1");
    ok.expect_eq("n=1", 2L, 2L);
    CheckReport r = ok.finish();
    CHECK(r.status == "pass");
    CHECK(r.witnesses.empty());

    Checker bad("x.bad");
    bad.expect("n=0", "1", "2");
    CHECK(bad.failed());
    CHECK(bad.mismatches() == 1);
    CheckReport rb = bad.finish();
    CHECK(rb.status == "fail");
    REQUIRE(rb.witnesses.size() == 1);
    CHECK(rb.witnesses[0].input == "n=0");
    CHECK(rb.witnesses[0].expected == "1");
    CHECK(rb.witnesses[0].actual == "2");

    Checker t("x.true");
    t.expect_true("holds", false, "details here");
    CHECK(t.finish().status == "fail");
}

TEST_CASE("witness storage is capped") {
    Checker c("x.many");
    for (int i = 0; i < 20; ++i)
        c.expect("i=" + std::to_string(i), "0", "1");
    CheckReport r = c.finish();
    CHECK(r.status == "fail");
    CHECK(r.witnesses.size() == 8);
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("20 mismatches") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("findings never flip the verdict") {
    Checker c("x.audit");
    c.expect("n=0", "1", "1");
    c.finding("n=5", "7", "8");
    CHECK_FALSE(c.failed());
    CheckReport r = c.finish();
    CHECK(r.status == "pass");
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].input == "n=5");
}

TEST_CASE("audit finish passes despite mismatches") {
    Checker c("x.audit2");
    c.expect("n=0", "1", "2");
    CheckReport r = c.finish(true);
    CHECK(r.status == "pass");
    CHECK(r.witnesses.size() == 1);
}

TEST_CASE("inconclusive wins over everything") {
    Checker c("x.inc");
    c.expect("n=0", "1", "1");
    c.inconclusive("window too small");
    CheckReport r = c.finish();
    CHECK(r.status == "inconclusive");
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("window too small") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("summary counts statuses") {
    std::vector<CheckReport> reps(5);
    reps[0].status = "pass";
    reps[1].status = "fail";
    reps[2].status = "pass";
    reps[3].status = "inconclusive";
    reps[4].status = "pass";
    RunSummary s = summarize(reps);
    CHECK(s.pass == 3);
    CHECK(s.fail == 1);
    CHECK(s.inconclusive == 1);
}

TEST_CASE("json round trip") {
    std::vector<CheckReport> reps(2);
    reps[0].id = "a.one";
    reps[0].params = "n_max=4";
    reps[0].status = "pass";
    reps[0].notes = {"all good"};
    reps[1].id = "b.two";
    reps[1].status = "fail";
    reps[1].witnesses = {{"n=3", "5", "-5"}};

    std::string body = reports_to_json(reps, false);
    CHECK(body.find("\"meta\"") == std::string::npos);
    CHECK(reports_to_json(reps, true).find("\"meta\"") != std::string::npos);

    auto back = reports_from_json(body);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "a.one");
    CHECK(back[0].params == "n_max=4");
    CHECK(back[0].status == "pass");
    REQUIRE(back[0].notes.size() == 1);
    CHECK(back[0].notes[0] == "all good");
    REQUIRE(back[1].witnesses.size() == 1);
    CHECK(back[1].witnesses[0].expected == "5");
    CHECK(back[1].witnesses[0].actual == "-5");

    // meta-free serialization is deterministic
    CHECK(reports_to_json(reps, false) == body);
}

TEST_CASE("markdown and csv rendering") {
    std::vector<CheckReport> reps(1);
    reps[0].id = "a.one";
    reps[0].status = "fail";
    reps[0].witnesses = {{"n=2", "1+1*t^1", "1"}};
    reps[0].notes = {"note, with comma and \"quotes\""};

    std::string md = reports_to_md(reps);
    CHECK(md.find("# Verification report") != std::string::npos);
    CHECK(md.find("a.one") != std::string::npos);
    CHECK(md.find("## Details") != std::string::npos);
    CHECK(md.find("1+1*t^1") != std::string::npos);

    std::string csv = reports_to_csv(reps);
    CHECK(csv.rfind("id,params,status", 0) == 0);
    CHECK(csv.find("\"note, with comma and \"\"quotes\"\"\"") != std::string::npos);
}
