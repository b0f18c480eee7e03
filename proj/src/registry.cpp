#include "mbh/checks.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mbh/errors.hpp"

namespace mbh {

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        add_core_checks(v);
        add_section_checks(v);
        add_polyfam_checks(v);
        add_shifted_checks(v);
        return v;
    }();
    return defs;
}

namespace {
std::vector<std::string> split_dots(const std::string& s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t dot = s.find('.', pos);
        if (dot == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, dot - pos));
        pos = dot + 1;
    }
    return parts;
}
} // namespace

bool id_matches(const std::string& id, const std::string& filter) {
    if (id == filter) return true;
    auto is = split_dots(id);
    auto fs = split_dots(filter);
    if (fs.empty() || fs.size() > is.size()) return false;
    for (size_t start = 0; start + fs.size() <= is.size(); ++start) {
        bool ok = true;
        for (size_t j = 0; j < fs.size(); ++j)
            if (is[start + j] != fs[j]) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

std::vector<CheckReport> run_checks(const RunConfig& cfg,
                                    const std::vector<std::string>& filters) {
#ifdef _OPENMP
    omp_set_num_threads(cfg.jobs > 0 ? cfg.jobs : 1);
#endif
    std::vector<CheckReport> out;
    for (const auto& def : check_registry()) {
        bool selected = filters.empty();
        for (const auto& f : filters)
            if (id_matches(def.id, f)) { selected = true; break; }
        if (!selected) continue;
        try {
            out.push_back(def.fn(cfg));
        } catch (const TooLarge& e) {
            Checker c(def.id);
            c.inconclusive(std::string("size cap hit: ") + e.what());
            out.push_back(c.finish());
        } catch (const OrderExhausted& e) {
            Checker c(def.id);
            c.inconclusive(std::string("series window too small: ") + e.what());
            out.push_back(c.finish());
        } catch (const InsufficientTerms& e) {
            Checker c(def.id);
            c.inconclusive(std::string("term window too small: ") + e.what());
            out.push_back(c.finish());
        } catch (const std::exception& e) {
            Checker c(def.id);
            c.note(std::string("exception: ") + e.what());
            c.expect_true("check body", false, e.what());
            out.push_back(c.finish());
        }
    }
    return out;
}

} // namespace mbh
