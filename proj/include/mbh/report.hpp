#pragma once

#include <string>
#include <vector>

#include "mbh/int_util.hpp"
#include "mbh/poly.hpp"
#include "mbh/rat.hpp"

namespace mbh {

inline constexpr const char* kToolName = "mbh";
inline constexpr const char* kToolVersion = "1.0.0";

struct Witness {
    std::string input;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string id;
    std::string params;
    std::string status = "pass"; // pass | fail | inconclusive
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
};

inline std::string render_of(const std::string& s) { return s; }
inline std::string render_of(const char* s) { return s; }
inline std::string render_of(long v) { return std::to_string(v); }
inline std::string render_of(int v) { return std::to_string(v); }
inline std::string render_of(bool v) { return v ? "true" : "false"; }
template <class T>
std::string render_of(const T& v) {
    return render(v);
}

/* Accumulator for one check. Mismatches record a witness and flip the
   verdict to fail; findings record a witness without touching the verdict
   (for checks that only report what they saw). Witness storage is capped so
   a systematically wrong range cannot bloat the output; the total mismatch
   count is appended as a note when truncation happens. */
class Checker {
  public:
    explicit Checker(std::string id, std::string params = "");

    void expect(const std::string& input, const std::string& expected, const std::string& actual);
    void expect_true(const std::string& input, bool ok, const std::string& detail = "");
    void finding(const std::string& input, const std::string& expected, const std::string& actual);
    void note(const std::string& text);
    void inconclusive(const std::string& why);

    template <class T, class U>
    void expect_eq(const std::string& input, const T& expected, const U& actual) {
        expect(input, render_of(expected), render_of(actual));
    }

    long mismatches() const { return mismatches_; }
    bool failed() const { return mismatches_ > 0; }

    /* audit: verdict is pass no matter what was recorded (the findings stand
       on their own); inconclusive marks win over both */
    CheckReport finish(bool audit = false);

  private:
    CheckReport rep_;
    long mismatches_ = 0;
    bool inconclusive_ = false;
    static constexpr long kWitnessCap = 8;
};

struct RunSummary {
    long pass = 0;
    long fail = 0;
    long inconclusive = 0;
};

RunSummary summarize(const std::vector<CheckReport>& reports);

/* {meta, checks, summary}; meta carries tool/version/timestamp and can be
   omitted for byte-for-byte comparison of two runs */
std::string reports_to_json(const std::vector<CheckReport>& reports, bool include_meta = true);
std::vector<CheckReport> reports_from_json(const std::string& text);

std::string reports_to_md(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

} // namespace mbh
