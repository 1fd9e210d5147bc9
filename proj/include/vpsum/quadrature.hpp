#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace vpsum::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  ///< sum of per-panel |coarse - fine| estimates
    bool converged = false;
    int panels = 0;
};

/// Globally adaptive composite Gauss-Legendre (20 nodes per panel).
///
/// The panel with the largest local error estimate is bisected until the
/// summed estimate drops to abs_tol or max_panels is reached. Panels end up
/// concentrated where the integrand is least resolved (peaks, kinks,
/// endpoint singularities).
[[nodiscard]] Result integrate(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, int max_panels = 1 << 14);

/// Same, with the interval split first at the interior points in `breaks`
/// (unsorted, out-of-range entries ignored). Use for known kinks.
[[nodiscard]] Result integrate(const std::function<double(double)>& f, double a, double b,
                               std::span<const double> breaks, double abs_tol,
                               int max_panels = 1 << 14);

/// (2*pi/n) * sum_{j<n} f(2*pi*j/n): the trapezoid rule over one period.
[[nodiscard]] double periodic_trapezoid(const std::function<double(double)>& f, std::size_t n);

}  // namespace vpsum::quad
