#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpsum/constants.hpp"
#include "vpsum/fourier.hpp"
#include "vpsum/kernels.hpp"
#include "vpsum/moduli.hpp"

namespace vpsum {

enum class TheoremId { one = 1, two = 2, three = 3 };

/// Throws ConfigError for anything but 1, 2, 3.
[[nodiscard]] TheoremId theorem_from_int(int id);

/// Engineering conventions used when judging sweeps. The remainders are
/// O(1)-bounded without explicit constants, so none of these is a proven
/// threshold.
inline constexpr double kTrendTolerance = 0.02;
inline constexpr double kDominanceThreshold = 0.5;
inline constexpr double kLowerBoundFactor = 0.5;
inline constexpr int kLowerBoundMinGap = 128;
inline constexpr double kLowerBoundMaxQ = 0.7;

struct RunOptions {
    TheoremId theorem = TheoremId::one;
    std::size_t min_grid = 4096;  ///< floor for the phi* sampling grid
    double sup_rel_tol = 1e-3;
    double tail_tol = 1e-15;
    int perturb_sweeps = 0;       ///< coordinate-ascent passes; 0 keeps phi* as built
    unsigned threads = 0;         ///< sweep workers; 0 = hardware concurrency
};

/// One witness run. Absolute quantities carry the factor q^{n-p+1}/p and
/// may underflow for long sweeps; `*_coeff` fields and `ratio` are formed
/// from normalized values and stay O(1).
struct DeviationReport {
    std::string omega;
    double q = 0.0;
    double beta = 0.0;
    int n = 0;
    int p = 0;
    std::size_t grid = 0;      ///< phi* sampling grid
    std::size_t sup_grid = 0;  ///< evaluation grid at which the sup settled
    double empirical_sup = 0.0;
    double principal = 0.0;
    double remainder_scale = 0.0;
    double ratio = 0.0;
    double empirical_coeff = 0.0;  ///< empirical_sup / (q^{n-p+1}/p)
    double principal_coeff = 0.0;
    double remainder_coeff = 0.0;
    double argmax = 0.0;
    std::optional<double> bracket_low;
    std::optional<double> bracket_high;
    std::optional<double> bracket_low_coeff;
    std::optional<double> bracket_high_coeff;
    bool perturbed = false;

    [[nodiscard]] int gap() const noexcept { return n - p + 1; }
    [[nodiscard]] double remainder_to_principal() const noexcept {
        return remainder_coeff / principal_coeff;
    }
    /// False when remainder_scale / principal exceeds kDominanceThreshold.
    [[nodiscard]] bool principal_dominant() const noexcept {
        return remainder_to_principal() <= kDominanceThreshold;
    }
};

/// Prediction for the selected theorem. Theorem 2 requires a Hoelder modulus
/// (ConfigError otherwise).
[[nodiscard]] TheoremPrediction predict(TheoremId theorem, const Modulus& m,
                                        const PoissonParams& params, const VPParams& vp);

/// Builds phi*, takes its Poisson integral harmonic-by-harmonic and measures
/// the sup of rho_{n,p} on a refined grid. Throws PreconditionError when
/// n - p < 6/(1-q).
[[nodiscard]] DeviationReport estimate_sup_deviation(const Modulus& m, const PoissonParams& params,
                                                     const VPParams& vp,
                                                     const RunOptions& options = {});

/// The same measurement for an arbitrary sampled phi (no admissibility
/// requirement). The grid must resolve harmonic deviation_spectrum_degree.
[[nodiscard]] DeviationReport evaluate_witness(const SampledPeriodicFunction& phi, const Modulus& m,
                                               const PoissonParams& params, const VPParams& vp,
                                               const RunOptions& options = {});

/// Local coordinate ascent of rho_{n,p}(phi; x) over the samples of phi,
/// each move staying inside H_omega with respect to all other samples.
/// Returns the improved samples.
[[nodiscard]] SampledPeriodicFunction perturb_witness(const SampledPeriodicFunction& phi,
                                                      const Modulus& m, const PoissonParams& params,
                                                      const VPParams& vp, double x, int sweeps,
                                                      double tail_tol = 1e-15);

/// A sweep line: fixed modulus, q, beta, p, and a list of n - p + 1 values.
struct SweepLine {
    std::string modulus;
    double q = 0.5;
    double beta = 0.0;
    int p = 1;
    std::vector<int> gaps;
};

struct LineSummary {
    SweepLine line;
    std::vector<std::size_t> reports;  ///< indices into TheoremVerification::reports, by gap
    bool trend_ok = true;
    bool lower_bound_ok = true;
    bool bracket_ok = true;
    bool principal_dominant = true;  ///< every report on the line
    /// remainder_scale / principal at the smallest and largest gap.
    double first_remainder_ratio = 0.0;
    double last_remainder_ratio = 0.0;
};

struct TheoremVerification {
    TheoremId theorem = TheoremId::one;
    std::vector<DeviationReport> reports;  ///< sorted by (omega, q, beta, p, n)
    std::vector<LineSummary> lines;        ///< input order
    std::vector<std::string> warnings;
    bool trend_ok = true;
    bool lower_bound_ok = true;
    bool bracket_ok = true;

    /// All assertions hold and at least one configuration ran.
    [[nodiscard]] bool ok() const noexcept {
        return !reports.empty() && trend_ok && lower_bound_ok && bracket_ok;
    }
};

/// |r_{k+1} - 1| <= |r_k - 1| + tol for consecutive entries.
[[nodiscard]] bool trend_toward_one(std::span<const double> ratios, double tol = kTrendTolerance);

/// Runs every admissible configuration (concurrently, one job per
/// configuration) and judges each line. Inadmissible or unsupported
/// configurations are skipped with a warning.
[[nodiscard]] TheoremVerification verify_theorem(TheoremId theorem, const std::vector<SweepLine>& sweep,
                                                 const RunOptions& options = {});

enum class IdentityMode { full, single_point, limiting };

struct IdentityCheck {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    [[nodiscard]] bool pass() const noexcept { return max_error <= tolerance; }
};

struct IdentityReport {
    IdentityMode mode = IdentityMode::full;
    std::vector<IdentityCheck> checks;
    [[nodiscard]] bool ok() const noexcept;
};

/// Kernel closed forms against series, K_{p,q} by quadrature against the
/// elliptic form, block sums, e_n bounds, the bracket inequality.
[[nodiscard]] IdentityReport verify_identities(IdentityMode mode = IdentityMode::full);

}  // namespace vpsum
