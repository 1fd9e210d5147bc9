#include "vpsum/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace vpsum {

using nlohmann::ordered_json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_header() {
    return "omega,q,beta,n,p,grid,empirical_sup,principal,remainder_scale,ratio";
}

std::string csv_row(const DeviationReport& r) {
    std::ostringstream o;
    o << r.omega << ',' << format_double(r.q) << ',' << format_double(r.beta) << ',' << r.n << ','
      << r.p << ',' << r.grid << ',' << format_double(r.empirical_sup) << ','
      << format_double(r.principal) << ',' << format_double(r.remainder_scale) << ','
      << format_double(r.ratio);
    return o.str();
}

std::string to_csv(const std::vector<DeviationReport>& reports) {
    std::string out = csv_header() + "\n";
    for (const auto& r : reports) out += csv_row(r) + "\n";
    return out;
}

std::string to_csv(const TheoremPrediction& t) {
    auto opt_field = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    return "principal,remainder_scale,bracket_low,bracket_high\n" + format_double(t.principal()) + "," +
           format_double(t.remainder_scale()) + "," + opt_field(t.bracket_low()) + "," +
           opt_field(t.bracket_high()) + "\n";
}

namespace {

ordered_json opt(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json report_json(const DeviationReport& r) {
    ordered_json j;
    j["omega"] = r.omega;
    j["q"] = r.q;
    j["beta"] = r.beta;
    j["n"] = r.n;
    j["p"] = r.p;
    j["grid"] = r.grid;
    j["sup_grid"] = r.sup_grid;
    j["empirical_sup"] = r.empirical_sup;
    j["principal"] = r.principal;
    j["remainder_scale"] = r.remainder_scale;
    j["ratio"] = r.ratio;
    j["empirical_coeff"] = r.empirical_coeff;
    j["principal_coeff"] = r.principal_coeff;
    j["remainder_coeff"] = r.remainder_coeff;
    j["argmax"] = r.argmax;
    j["bracket_low"] = opt(r.bracket_low);
    j["bracket_high"] = opt(r.bracket_high);
    j["principal_dominant"] = r.principal_dominant();
    j["perturbed"] = r.perturbed;
    return j;
}

ordered_json conventions_json() {
    ordered_json c;
    c["trend_tolerance"] = kTrendTolerance;
    c["dominance_threshold"] = kDominanceThreshold;
    c["lower_bound_factor"] = kLowerBoundFactor;
    c["lower_bound_min_gap"] = kLowerBoundMinGap;
    c["lower_bound_max_q"] = kLowerBoundMaxQ;
    c["bracket_slack"] = "one remainder_scale";
    c["note"] = "engineering conventions; the remainders carry unspecified O(1) constants";
    return c;
}

}  // namespace

std::string to_json(const DeviationReport& r) { return report_json(r).dump(2); }

std::string to_json(const TheoremVerification& v) {
    ordered_json j;
    j["theorem"] = static_cast<int>(v.theorem);
    j["conventions"] = conventions_json();
    j["ok"] = v.ok();
    j["trend_ok"] = v.trend_ok;
    j["lower_bound_ok"] = v.lower_bound_ok;
    j["bracket_ok"] = v.bracket_ok;
    j["warnings"] = v.warnings;
    auto& lines = j["lines"] = ordered_json::array();
    for (const auto& s : v.lines) {
        ordered_json l;
        l["modulus"] = s.line.modulus;
        l["q"] = s.line.q;
        l["beta"] = s.line.beta;
        l["p"] = s.line.p;
        l["m"] = s.line.gaps;
        l["trend_ok"] = s.trend_ok;
        l["lower_bound_ok"] = s.lower_bound_ok;
        l["bracket_ok"] = s.bracket_ok;
        l["principal_dominant"] = s.principal_dominant;
        l["first_remainder_ratio"] = s.first_remainder_ratio;
        l["last_remainder_ratio"] = s.last_remainder_ratio;
        l["reports"] = s.reports;
        lines.push_back(std::move(l));
    }
    auto& reports = j["reports"] = ordered_json::array();
    for (const auto& r : v.reports) reports.push_back(report_json(r));
    return j.dump(2);
}

std::string to_json(const IdentityReport& r) {
    ordered_json j;
    j["ok"] = r.ok();
    auto& checks = j["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"max_error", c.max_error}, {"tolerance", c.tolerance},
                          {"pass", c.pass()}});
    return j.dump(2);
}

std::string to_json(const TheoremPrediction& t) {
    ordered_json j;
    j["prefactor"] = t.prefactor;
    j["principal_coeff"] = t.principal_coeff;
    j["remainder_coeff"] = t.remainder_coeff;
    j["principal"] = t.principal();
    j["remainder_scale"] = t.remainder_scale();
    j["bracket_low"] = opt(t.bracket_low());
    j["bracket_high"] = opt(t.bracket_high());
    return j.dump(2);
}

std::string to_text(const TheoremVerification& v) {
    std::ostringstream o;
    o << "# theorem " << static_cast<int>(v.theorem) << " sweep\n"
      << "# conventions (not proven thresholds): trend tolerance " << format_double(kTrendTolerance)
      << ", principal-dominance threshold " << format_double(kDominanceThreshold)
      << ", lower bound ratio >= " << format_double(kLowerBoundFactor) << " for n-p+1 >= "
      << kLowerBoundMinGap << " and q <= " << format_double(kLowerBoundMaxQ)
      << ", bracket slack one remainder_scale\n";
    for (const auto& w : v.warnings) o << "warning: " << w << "\n";
    for (const auto& s : v.lines) {
        o << "line " << s.line.modulus << " q=" << format_double(s.line.q)
          << " beta=" << format_double(s.line.beta) << " p=" << s.line.p << "\n";
        for (const auto k : s.reports) {
            const auto& r = v.reports[k];
            o << "  n-p+1=" << r.gap() << " ratio=" << format_double(r.ratio)
              << " remainder/principal=" << format_double(r.remainder_to_principal());
            if (!r.principal_dominant()) o << "  [principal not dominant]";
            o << "\n";
        }
        o << "  trend " << (s.trend_ok ? "ok" : "FAILED");
        if (!s.lower_bound_ok) o << ", lower bound FAILED";
        if (!s.bracket_ok) o << ", bracket FAILED";
        if (!s.principal_dominant) o << ", principal not dominant";
        o << "\n";
    }
    o << (v.ok() ? "PASS" : "FAIL") << "\n";
    return o.str();
}

std::string to_text(const IdentityReport& r) {
    std::ostringstream o;
    for (const auto& c : r.checks)
        o << (c.pass() ? "ok   " : "FAIL ") << c.name << ": max error " << format_double(c.max_error)
          << " (tolerance " << format_double(c.tolerance) << ")\n";
    o << (r.ok() ? "PASS" : "FAIL") << "\n";
    return o.str();
}

std::string gnuplot_series(const TheoremVerification& v) {
    std::ostringstream o;
    o << "# n-p+1 ratio\n";
    bool first = true;
    for (const auto& s : v.lines) {
        if (s.reports.empty()) continue;
        if (!first) o << "\n\n";
        first = false;
        o << "# " << s.line.modulus << " q=" << format_double(s.line.q)
          << " beta=" << format_double(s.line.beta) << " p=" << s.line.p << "\n";
        for (const auto k : s.reports)
            o << v.reports[k].gap() << ' ' << format_double(v.reports[k].ratio) << "\n";
    }
    return o.str();
}

}  // namespace vpsum
