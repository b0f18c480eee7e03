#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mbh/checks.hpp"
#include "mbh/hankel.hpp"
#include "mbh/poly.hpp"
#include "mbh/sequences.hpp"

namespace {

using namespace mbh;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::optional<Family> poly_family(const std::string& f) {
    if (f == "a") return Family::A;
    if (f == "b") return Family::B;
    if (f == "c") return Family::C;
    return std::nullopt;
}

bool parse_rat(const std::string& s, Rat& out) {
    try {
        size_t slash = s.find('/');
        if (slash == std::string::npos) {
            out = Rat(Int(s));
        } else {
            out = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int write_text(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    out << body;
    return 0;
}

TPoly family_poly(Family f, long n) {
    switch (f) {
        case Family::A: return a_poly(n);
        case Family::B: return b_poly(n);
        default: return c_poly(n);
    }
}

int run_seq(const std::string& family, long r, long nmax, const std::string& teval) {
    if (family == "mid") {
        if (!teval.empty()) return usage_error("--t-eval applies to the polynomial families a, b, c");
        for (long n = 0; n <= nmax; ++n) std::cout << n << " " << render(shifted_middle(n, r)) << "\n";
        return 0;
    }
    if (r != 0) return usage_error("--r applies to the integer family mid");
    Family f = *poly_family(family);
    Rat q;
    bool eval = !teval.empty();
    if (eval && !parse_rat(teval, q)) return usage_error("--t-eval expects an integer or p/q rational");
    for (long n = 0; n <= nmax; ++n) {
        TPoly p = family_poly(f, n);
        if (eval)
            std::cout << n << " " << p.eval(q).str() << "\n";
        else
            std::cout << n << " " << render(p) << "\n";
    }
    return 0;
}

int run_det(const std::string& family, long r, long k, long n) {
    if (family == "mid") {
        std::cout << render(hankel_det_int(r, k, n)) << "\n";
        return 0;
    }
    if (r != 0) return usage_error("--r applies to the integer family mid");
    std::cout << render(hankel_det_poly(*poly_family(family), k, n)) << "\n";
    return 0;
}

int run_table(const std::string& family, long r, long kmax, long nmax, const std::string& format,
              const std::string& out) {
    std::vector<std::vector<std::string>> cols;
    for (long k = 0; k <= kmax; ++k) {
        std::vector<std::string> col;
        if (family == "mid") {
            auto tab = det_table_int(r, k, nmax);
            for (const auto& v : tab) col.push_back(render(v));
        } else {
            if (r != 0) return usage_error("--r applies to the integer family mid");
            auto tab = det_table_poly(*poly_family(family), k, nmax);
            for (const auto& v : tab) col.push_back(render(v));
        }
        cols.push_back(std::move(col));
    }
    std::ostringstream o;
    if (format == "csv") {
        o << "n";
        for (long k = 0; k <= kmax; ++k) o << ",k=" << k;
        o << "\n";
        for (long n = 0; n <= nmax; ++n) {
            o << n;
            for (long k = 0; k <= kmax; ++k) o << "," << cols[static_cast<size_t>(k)][static_cast<size_t>(n)];
            o << "\n";
        }
    } else {
        o << "| n |";
        for (long k = 0; k <= kmax; ++k) o << " k=" << k << " |";
        o << "\n|---|";
        for (long k = 0; k <= kmax; ++k) o << "---|";
        o << "\n";
        for (long n = 0; n <= nmax; ++n) {
            o << "| " << n << " |";
            for (long k = 0; k <= kmax; ++k)
                o << " " << cols[static_cast<size_t>(k)][static_cast<size_t>(n)] << " |";
            o << "\n";
        }
    }
    return write_text(out, o.str());
}

int run_verify(const RunConfig& cfg, const std::vector<std::string>& ids, const std::string& format,
               const std::string& out) {
    auto reports = run_checks(cfg, ids);
    std::string body;
    if (format == "json")
        body = reports_to_json(reports);
    else if (format == "md")
        body = reports_to_md(reports);
    else
        body = reports_to_csv(reports);
    int wrc = write_text(out, body);
    RunSummary s = summarize(reports);
    std::cerr << "pass " << s.pass << ", fail " << s.fail << ", inconclusive " << s.inconclusive
              << "\n";
    if (wrc != 0) return 1;
    return s.fail > 0 ? 1 : 0;
}

int run_report(const std::string& in, const std::string& format) {
    std::ifstream f(in, std::ios::binary);
    if (!f) return usage_error("cannot read " + in);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<CheckReport> reports;
    try {
        reports = reports_from_json(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << in << " is not a report file: " << e.what() << "\n";
        return 1;
    }
    std::string body;
    if (format == "md")
        body = reports_to_md(reports);
    else if (format == "csv")
        body = reports_to_csv(reports);
    else
        body = reports_to_json(reports);
    return write_text("", body);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel determinants of middle binomial coefficients and their polynomial families"};
    app.require_subcommand(1);
    const std::vector<std::string> families = {"mid", "a", "b", "c"};

    auto* seq = app.add_subcommand("seq", "print a sequence as rows \"n value\"");
    std::string seq_family;
    long seq_r = 0, seq_nmax = 0;
    std::string seq_teval;
    seq->add_option("--family", seq_family, "mid, a, b, or c")
        ->required()
        ->check(CLI::IsMember(families));
    seq->add_option("--r", seq_r, "shift for the mid family")->check(CLI::NonNegativeNumber);
    seq->add_option("--n-max", seq_nmax, "last index")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--t-eval", seq_teval, "evaluate polynomials at this exact rational");

    auto* det = app.add_subcommand("det", "one Hankel determinant");
    std::string det_family;
    long det_r = 0, det_k = 0, det_n = 0;
    det->add_option("--family", det_family, "mid, a, b, or c")
        ->required()
        ->check(CLI::IsMember(families));
    det->add_option("--r", det_r, "shift for the mid family")->check(CLI::NonNegativeNumber);
    det->add_option("--k", det_k, "offset")->required()->check(CLI::NonNegativeNumber);
    det->add_option("--n", det_n, "matrix size")->required()->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "grid of determinants, k across, n down");
    std::string tab_family, tab_format = "csv", tab_out;
    long tab_r = 0, tab_kmax = 0, tab_nmax = 0;
    table->add_option("--family", tab_family, "mid, a, b, or c")
        ->required()
        ->check(CLI::IsMember(families));
    table->add_option("--r", tab_r, "shift for the mid family")->check(CLI::NonNegativeNumber);
    table->add_option("--k-max", tab_kmax)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--n-max", tab_nmax)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", tab_format)->check(CLI::IsMember({"csv", "md"}));
    table->add_option("--out", tab_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the verification harness");
    std::vector<std::string> ver_ids;
    long ver_kmax = 0, ver_nmax = 0, ver_rmax = 0, ver_N = 0, ver_periods = 0, ver_tcap = 0;
    int ver_jobs = 1;
    std::string ver_format = "json", ver_out;
    verify->add_option("--id", ver_ids, "check id filter, repeatable; segment matches select groups");
    auto* o_kmax = verify->add_option("--k-max", ver_kmax)->check(CLI::NonNegativeNumber);
    auto* o_nmax = verify->add_option("--n-max", ver_nmax)->check(CLI::NonNegativeNumber);
    auto* o_rmax = verify->add_option("--r-max", ver_rmax)->check(CLI::NonNegativeNumber);
    auto* o_N = verify->add_option("--N", ver_N, "series window")->check(CLI::NonNegativeNumber);
    auto* o_per = verify->add_option("--periods", ver_periods)->check(CLI::PositiveNumber);
    auto* o_tcap = verify->add_option("--tpoly-cap", ver_tcap, "largest polynomial Hankel size")
                       ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", ver_jobs, "threads inside elimination kernels")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", ver_format)->check(CLI::IsMember({"json", "md", "csv"}));
    verify->add_option("--out", ver_out, "report file (default stdout)");

    auto* report = app.add_subcommand("report", "re-render a JSON report");
    std::string rep_in, rep_format = "md";
    report->add_option("--in", rep_in)->required();
    report->add_option("--format", rep_format)->check(CLI::IsMember({"md", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) return run_seq(seq_family, seq_r, seq_nmax, seq_teval);
        if (det->parsed()) return run_det(det_family, det_r, det_k, det_n);
        if (table->parsed())
            return run_table(tab_family, tab_r, tab_kmax, tab_nmax, tab_format, tab_out);
        if (verify->parsed()) {
            RunConfig cfg;
            if (o_kmax->count() > 0) cfg.k_max = ver_kmax;
            if (o_nmax->count() > 0) cfg.n_max = ver_nmax;
            if (o_rmax->count() > 0) cfg.r_max = ver_rmax;
            if (o_N->count() > 0) cfg.N = ver_N;
            if (o_per->count() > 0) cfg.periods = ver_periods;
            if (o_tcap->count() > 0) cfg.tpoly_cap = ver_tcap;
            cfg.jobs = ver_jobs;
            return run_verify(cfg, ver_ids, ver_format, ver_out);
        }
        if (report->parsed()) return run_report(rep_in, rep_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
