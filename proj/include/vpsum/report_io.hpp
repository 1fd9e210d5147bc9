#pragma once

#include <string>
#include <vector>

#include "vpsum/constants.hpp"
#include "vpsum/harness.hpp"

namespace vpsum {

/// Shortest decimal form that round-trips to the same double.
[[nodiscard]] std::string format_double(double x);

/// `omega,q,beta,n,p,grid,empirical_sup,principal,remainder_scale,ratio`
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const DeviationReport& r);
[[nodiscard]] std::string to_csv(const std::vector<DeviationReport>& reports);

/// `principal,remainder_scale,bracket_low,bracket_high` header and one row;
/// absent bracket ends are empty fields.
[[nodiscard]] std::string to_csv(const TheoremPrediction& t);

[[nodiscard]] std::string to_json(const DeviationReport& r);
[[nodiscard]] std::string to_json(const TheoremVerification& v);
[[nodiscard]] std::string to_json(const IdentityReport& r);
[[nodiscard]] std::string to_json(const TheoremPrediction& t);

/// Human-readable summary of a sweep verification, thresholds first.
[[nodiscard]] std::string to_text(const TheoremVerification& v);
[[nodiscard]] std::string to_text(const IdentityReport& r);

/// gnuplot data: one block per sweep line with columns (n-p+1, ratio),
/// blocks separated by two blank lines.
[[nodiscard]] std::string gnuplot_series(const TheoremVerification& v);

}  // namespace vpsum
