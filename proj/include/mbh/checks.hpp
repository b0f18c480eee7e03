#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbh/report.hpp"

namespace mbh {

/* Knobs for the verification run. Every field is optional; each check falls
   back to the range its guarantee is stated for, so a bare run reproduces
   the published envelope and flags only widen or narrow it. */
struct RunConfig {
    std::optional<long> k_max;
    std::optional<long> n_max;
    std::optional<long> r_max;
    std::optional<long> N;       // series / generating-function window
    std::optional<long> periods; // period count for the shifted-sequence scans
    long tpoly_cap = 48;         // largest polynomial Hankel size attempted
    int jobs = 1;

    long kmax(long dflt) const { return k_max.value_or(dflt); }
    long nmax(long dflt) const { return n_max.value_or(dflt); }
    long rmax(long dflt) const { return r_max.value_or(dflt); }
    long window(long dflt) const { return N.value_or(dflt); }
    long period_count(long dflt) const { return periods.value_or(dflt); }
};

using CheckFn = std::function<CheckReport(const RunConfig&)>;

struct CheckDef {
    std::string id;
    CheckFn fn;
};

/* all registered checks in their fixed execution order */
const std::vector<CheckDef>& check_registry();

/* `filter` hits `id` when equal, or when it matches a run of dot-separated
   segments of the id (so "theorem1" selects "sec3.theorem1" and "sec7"
   selects the whole section) */
bool id_matches(const std::string& id, const std::string& filter);

/* Run the selected checks in registry order. Exceptions escaping a check
   body are converted: TooLarge and OrderExhausted mean the configured caps
   were insufficient (inconclusive); anything else is a fail with the message
   recorded. */
std::vector<CheckReport> run_checks(const RunConfig& cfg,
                                    const std::vector<std::string>& filters);

/* contributors, one per implementation unit */
void add_core_checks(std::vector<CheckDef>& out);
void add_section_checks(std::vector<CheckDef>& out);
void add_polyfam_checks(std::vector<CheckDef>& out);
void add_shifted_checks(std::vector<CheckDef>& out);

} // namespace mbh
