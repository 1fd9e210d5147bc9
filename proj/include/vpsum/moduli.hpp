#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace vpsum {

enum class ModulusFamily {
    holder,       ///< t^alpha
    log_power,    ///< ln^alpha(1 + t)
    power_log,    ///< t^alpha ln(1/t), constant after e^{-1/alpha}
    inverse_log,  ///< ln^{-alpha}(1/t), constant after e^{-(1+alpha)}
    linear,       ///< t (Lipschitz; finite slope at zero)
    custom,
};

/// A modulus of continuity omega(t) with its declared properties.
///
/// Immutable after construction. The evaluator is total on [0, inf); it is
/// applied to |t| so that arguments rounded to -0 or -1e-17 stay in range.
class Modulus {
public:
    Modulus(std::string name, ModulusFamily family, double alpha,
            std::function<double(double)> eval, bool convex_upwards,
            std::optional<double> breakpoint = std::nullopt);

    [[nodiscard]] double operator()(double t) const { return eval_(t < 0.0 ? -t : t); }

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] ModulusFamily family() const noexcept { return family_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] bool convex_upwards() const noexcept { return convex_upwards_; }

    /// Point where a piecewise family switches to its constant plateau.
    [[nodiscard]] std::optional<double> breakpoint() const noexcept { return breakpoint_; }

private:
    std::string name_;
    ModulusFamily family_;
    double alpha_;
    std::function<double(double)> eval_;
    bool convex_upwards_;
    std::optional<double> breakpoint_;
};

/// omega(t) = t^alpha, 0 < alpha < 1. Throws DomainError otherwise.
[[nodiscard]] Modulus make_holder(double alpha);

enum class PaperFamily { log_power, power_log, inverse_log };

/// The three non-Hoelder example moduli satisfying omega(t)/t -> inf.
/// alpha in (0,1) for log_power, (0,1] for the two piecewise families.
[[nodiscard]] Modulus make_paper_modulus(PaperFamily family, double alpha);

/// omega(t) = t. A valid concave modulus for which omega(t)/t stays bounded;
/// used as the negative control for the infinite-slope condition.
[[nodiscard]] Modulus make_linear();

/// Wrap an arbitrary evaluator (test helpers, experiments).
[[nodiscard]] Modulus make_custom(std::string name, std::function<double(double)> eval,
                                  bool convex_upwards);

/// Parse a descriptor `family:alpha`, family one of holder, logpow, powlog,
/// invlog, linear (`linear` takes no alpha). Throws ParseError.
[[nodiscard]] Modulus parse_modulus(std::string_view descriptor);

/// Canonical descriptor for built-in families, the name for custom ones.
[[nodiscard]] std::string descriptor(const Modulus& m);

struct AxiomReport {
    bool holds = true;
    double max_violation = 0.0;
};

/// Checks omega(0) = 0, monotonicity, subadditivity and (when declared)
/// midpoint concavity over all pairs of grid points.
[[nodiscard]] AxiomReport check_modulus_axioms(const Modulus& m, std::span<const double> grid,
                                               double tol);

/// Dyadic proxy for lim omega(t)/t = inf: r_k = omega(2^-k) 2^k must be
/// strictly increasing on the upper half k in (k_max/2, k_max]. Heuristic:
/// a limit cannot be certified from finitely many samples. k_max >= 8.
[[nodiscard]] bool has_infinite_slope(const Modulus& m, int k_max = 40);

}  // namespace vpsum
