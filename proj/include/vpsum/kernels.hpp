#pragma once

#include <cstddef>

#include "vpsum/fourier.hpp"

namespace vpsum {

/// Poisson kernel parameters: 0 < q < 1 and a phase beta, stored modulo 4.
class PoissonParams {
public:
    /// Throws DomainError unless 0 < q < 1 and beta is finite.
    PoissonParams(double q, double beta);

    [[nodiscard]] double q() const noexcept { return q_; }
    /// beta reduced to [0, 4).
    [[nodiscard]] double beta() const noexcept { return beta_; }
    /// beta * pi / 2.
    [[nodiscard]] double phase() const noexcept;

private:
    double q_;
    double beta_;
};

/// de la Vallee Poussin parameters 1 <= p <= n. Operations that need the
/// strict p < n check it themselves; p == n is legal for the sums.
class VPParams {
public:
    VPParams(int n, int p);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int p() const noexcept { return p_; }
    /// n - p + 1, the index of the first harmonic a V_{n,p} sum does not
    /// reproduce exactly.
    [[nodiscard]] int gap() const noexcept { return n_ - p_ + 1; }

private:
    int n_;
    int p_;
};

/// Throws DomainError when p == n.
void require_strict(const VPParams& vp);

/// sum_{k>=1} q^k cos(kt + beta*pi/2), in closed form.
[[nodiscard]] double poisson_kernel(const PoissonParams& params, double t);

/// 1 / sqrt(1 - 2q cos t + q^2).
[[nodiscard]] double z_q(double q, double t);

/// atan2(q sin t, 1 - q cos t); continuous in t, zero at t = 0.
[[nodiscard]] double theta_q(double q, double t);

/// Tail sum_{j>=m} q^j cos(jt + beta*pi/2) = q^m Z_q(t) cos(mt + theta_q(t) + beta*pi/2).
[[nodiscard]] double poisson_tail(const PoissonParams& params, int m, double t);

/// sum_{k=n-p+1}^{n} q^k cos(kt + theta_q(t) + beta*pi/2) via its closed form
///   q^{n-p+1} Z_q(t)/Z_{q^p}(pt) cos((n-p+1)t + 2 theta_q(t) - theta_{q^p}(pt) + beta*pi/2).
[[nodiscard]] double block_sum(const PoissonParams& params, const VPParams& vp, double t);

enum class IntegralRoute { quadrature, spectral };

inline constexpr std::size_t kDefaultQuadratureGrid = 4096;

/// A0 + (1/pi) int_0^{2pi} phi(x+t) P_{q,beta}(t) dt.
///
/// `quadrature`: trapezoid rule on `grid` uniform nodes. `spectral`: phi's
/// discrete Fourier coefficients damped by q^k and phase-shifted by
/// beta*pi/2. `grid` must be a power of two >= 256 (ConfigError).
[[nodiscard]] double poisson_integral(const PeriodicFn& phi, const PoissonParams& params, double a0,
                                      double x, std::size_t grid = kDefaultQuadratureGrid,
                                      IntegralRoute route = IntegralRoute::quadrature);

/// Samples of the Poisson integral on phi's own grid (spectral route).
[[nodiscard]] SampledPeriodicFunction poisson_integral(const SampledPeriodicFunction& phi,
                                                       const PoissonParams& params, double a0);

/// Same, via the trapezoid rule at every node (O(N^2)); verification route.
[[nodiscard]] SampledPeriodicFunction poisson_integral_quadrature(const SampledPeriodicFunction& phi,
                                                                  const PoissonParams& params,
                                                                  double a0);

/// Fourier coefficients of the Poisson integral given those of phi:
/// harmonic k becomes q^k * (phi_k shifted by -beta*pi/2 in phase).
[[nodiscard]] FourierCoeffs poisson_coeffs(const FourierCoeffs& phi, const PoissonParams& params,
                                           double a0);

/// Smallest K with q^K / (1 - q) < tol: harmonics beyond K contribute less
/// than tol relative to the unit-amplitude leading term.
[[nodiscard]] int tail_cutoff(double q, double tol = 1e-15);

}  // namespace vpsum
