#include "mbh/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace mbh {

Checker::Checker(std::string id, std::string params) {
    rep_.id = std::move(id);
    rep_.params = std::move(params);
}

void Checker::expect(const std::string& input, const std::string& expected,
                     const std::string& actual) {
    if (expected == actual) return;
    ++mismatches_;
    if (static_cast<long>(rep_.witnesses.size()) < kWitnessCap)
        rep_.witnesses.push_back({input, expected, actual});
}

void Checker::expect_true(const std::string& input, bool ok, const std::string& detail) {
    if (ok) return;
    ++mismatches_;
    if (static_cast<long>(rep_.witnesses.size()) < kWitnessCap)
        rep_.witnesses.push_back({input, "true", detail.empty() ? "false" : detail});
}

void Checker::finding(const std::string& input, const std::string& expected,
                      const std::string& actual) {
    if (static_cast<long>(rep_.witnesses.size()) < kWitnessCap + 8)
        rep_.witnesses.push_back({input, expected, actual});
}

void Checker::note(const std::string& text) { rep_.notes.push_back(text); }

void Checker::inconclusive(const std::string& why) {
    inconclusive_ = true;
    rep_.notes.push_back("inconclusive: " + why);
}

CheckReport Checker::finish(bool audit) {
    if (mismatches_ > static_cast<long>(rep_.witnesses.size()))
        rep_.notes.push_back(std::to_string(mismatches_) + " mismatches total, " +
                             std::to_string(rep_.witnesses.size()) + " recorded");
    if (inconclusive_)
        rep_.status = "inconclusive";
    else if (mismatches_ > 0 && !audit)
        rep_.status = "fail";
    else
        rep_.status = "pass";
    return rep_;
}

RunSummary summarize(const std::vector<CheckReport>& reports) {
    RunSummary s;
    for (const auto& r : reports) {
        if (r.status == "pass") ++s.pass;
        else if (r.status == "fail") ++s.fail;
        else ++s.inconclusive;
    }
    return s;
}

namespace {

using json = nlohmann::ordered_json;

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json report_to_json(const CheckReport& r) {
    json jr;
    jr["id"] = r.id;
    jr["params"] = r.params;
    jr["status"] = r.status;
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
    jr["witnesses"] = ws;
    jr["notes"] = r.notes;
    return jr;
}

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string reports_to_json(const std::vector<CheckReport>& reports, bool include_meta) {
    json root;
    if (include_meta) {
        root["meta"] = {{"tool", kToolName},
                        {"version", kToolVersion},
                        {"generated_at", iso_now()}};
    }
    json checks = json::array();
    for (const auto& r : reports) checks.push_back(report_to_json(r));
    root["checks"] = checks;
    RunSummary s = summarize(reports);
    root["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
    return root.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
    json root = json::parse(text);
    std::vector<CheckReport> out;
    for (const auto& jr : root.at("checks")) {
        CheckReport r;
        r.id = jr.at("id").get<std::string>();
        r.params = jr.value("params", std::string());
        r.status = jr.at("status").get<std::string>();
        if (jr.contains("witnesses"))
            for (const auto& w : jr["witnesses"])
                r.witnesses.push_back({w.value("input", std::string()),
                                       w.value("expected", std::string()),
                                       w.value("actual", std::string())});
        if (jr.contains("notes"))
            for (const auto& n : jr["notes"]) r.notes.push_back(n.get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

std::string reports_to_md(const std::vector<CheckReport>& reports) {
    RunSummary s = summarize(reports);
    std::ostringstream o;
    o << "# Verification report\n\n";
    o << "- pass: " << s.pass << "\n- fail: " << s.fail
      << "\n- inconclusive: " << s.inconclusive << "\n\n";
    o << "| check | status | params |\n|---|---|---|\n";
    for (const auto& r : reports)
        o << "| " << r.id << " | " << r.status << " | " << r.params << " |\n";
    bool any_detail = false;
    for (const auto& r : reports) {
        if (r.witnesses.empty() && r.notes.empty()) continue;
        if (!any_detail) {
            o << "\n## Details\n";
            any_detail = true;
        }
        o << "\n### " << r.id << " (" << r.status << ")\n\n";
        if (!r.params.empty()) o << "params: `" << r.params << "`\n\n";
        for (const auto& n : r.notes) o << "- note: " << n << "\n";
        if (!r.witnesses.empty()) {
            o << "\n| input | expected | actual |\n|---|---|---|\n";
            for (const auto& w : r.witnesses)
                o << "| " << w.input << " | `" << w.expected << "` | `" << w.actual << "` |\n";
        }
    }
    return o.str();
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream o;
    o << "id,params,status,witnesses,notes\n";
    for (const auto& r : reports) {
        std::string ws;
        for (const auto& w : r.witnesses) {
            if (!ws.empty()) ws += " ; ";
            ws += w.input + " expected=" + w.expected + " actual=" + w.actual;
        }
        std::string ns;
        for (const auto& n : r.notes) {
            if (!ns.empty()) ns += " ; ";
            ns += n;
        }
        o << csv_quote(r.id) << ',' << csv_quote(r.params) << ',' << csv_quote(r.status) << ','
          << csv_quote(ws) << ',' << csv_quote(ns) << "\n";
    }
    return o.str();
}

} // namespace mbh
