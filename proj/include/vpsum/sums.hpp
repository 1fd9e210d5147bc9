#pragma once

#include <cstddef>

#include "vpsum/fourier.hpp"
#include "vpsum/kernels.hpp"

namespace vpsum {

/// V_{n,p}(f; x) = (1/p) sum_{k=n-p}^{n-1} S_k(f; x). Needs n-1 <= K.
[[nodiscard]] double vp_sum(const FourierCoeffs& c, const VPParams& vp, double x);

/// Multiplier of harmonic j in rho_{n,p} = f - V_{n,p}(f):
/// 0 for j <= n-p, (j-(n-p))/p for n-p < j < n, 1 for j >= n.
[[nodiscard]] double deviation_weight(const VPParams& vp, int j) noexcept;

/// Samples of rho_{n,p}(f; x) = f(x) - V_{n,p}(f; x) on f's own grid.
/// Throws RangeError if the grid cannot resolve harmonic n-1.
[[nodiscard]] SampledPeriodicFunction deviation_direct(const SampledPeriodicFunction& f,
                                                       const VPParams& vp);

/// rho_{n,p}(f; x) for f the Poisson integral of phi, from the integral
/// representation
///   q^{n-p+1}/(pi p) int (phi(x+t) - phi(x)) Z_q^2(t)/Z_{q^p}(pt)
///                       cos((n-p+1)t + 2 theta_q(t) - theta_{q^p}(pt) + beta pi/2) dt
/// by the trapezoid rule. grid == 0 picks a power of two >= max(1024, 64(n-p+1));
/// an explicit grid below 16(n-p+1) throws ConfigError. Requires p < n.
[[nodiscard]] double deviation_integral(const PeriodicFn& phi, const PoissonParams& params,
                                        const VPParams& vp, double x, std::size_t grid = 0);

/// Kernel of the integral representation above, without the q^{n-p+1}/(pi p)
/// factor, sampled at t_j = 2 pi j / grid.
[[nodiscard]] std::vector<double> deviation_kernel(const PoissonParams& params, const VPParams& vp,
                                                   std::size_t grid);

/// rho_{n,p} of the Poisson integral of phi, built harmonic-by-harmonic from
/// phi's coefficients. The result carries scale = q^{n-p+1}; amplitudes are
/// w_j q^{j-(n-p+1)} times the phase-shifted phi coefficients, truncated once
/// q^{j-(n-p+1)}/(1-q) < tail_tol. Throws RangeError if phi's coefficients
/// stop before the truncation point.
[[nodiscard]] TrigSeries deviation_spectrum(const FourierCoeffs& phi, const PoissonParams& params,
                                            const VPParams& vp, double tail_tol = 1e-15);

/// Highest harmonic deviation_spectrum will read for these parameters.
[[nodiscard]] int deviation_spectrum_degree(const PoissonParams& params, const VPParams& vp,
                                            double tail_tol = 1e-15);

struct SupEstimate {
    double value = 0.0;     ///< normalized sup |s(x)|, excluding s.scale
    double argmax = 0.0;    ///< x in [0, 2 pi) where it was attained
    std::size_t grid = 0;   ///< grid size at acceptance
    int refinements = 0;
};

/// Grid maximum of |s(x)|, starting at `initial_grid` points and doubling
/// until two successive maxima differ by less than rel_tol (relative), then
/// polished by a local Brent search within one grid step of the argmax.
[[nodiscard]] SupEstimate sup_norm(const TrigSeries& s, std::size_t initial_grid,
                                   double rel_tol = 1e-3, std::size_t max_grid = std::size_t{1} << 22);

}  // namespace vpsum
