#pragma once

#include <cstddef>
#include <vector>

#include "vpsum/fourier.hpp"
#include "vpsum/kernels.hpp"
#include "vpsum/moduli.hpp"

namespace vpsum {

/// [3q/(1-q)] + 2.
[[nodiscard]] int alpha_q(double q);

/// Smallest n - p with n - p >= 6/(1-q).
[[nodiscard]] int min_admissible_gap(double q);

[[nodiscard]] bool is_admissible(const PoissonParams& params, const VPParams& vp);

/// The monotone change of variable
///   y1(t) = t + (2 theta_q(t) - theta_{q^p}(pt) + (1 - alpha_q) t + beta pi/2) / (n - p + alpha_q)
/// and its inverse. Under n - p >= 6/(1-q) the derivative stays in (1/3, 1),
/// so the inverse is computed by bracketed bisection.
class ChangeOfVariable {
public:
    /// Throws PreconditionError when n - p < 6/(1-q).
    ChangeOfVariable(const PoissonParams& params, const VPParams& vp);

    [[nodiscard]] const PoissonParams& params() const noexcept { return params_; }
    [[nodiscard]] const VPParams& vp() const noexcept { return vp_; }
    [[nodiscard]] int alpha_q() const noexcept { return alpha_q_; }
    /// n - p + alpha_q: the oscillation frequency after the substitution.
    [[nodiscard]] double frequency() const noexcept { return frequency_; }

    [[nodiscard]] double forward(double t) const;
    [[nodiscard]] double derivative(double t) const;
    /// y(tau) with |y1(y(tau)) - tau| at rounding level.
    [[nodiscard]] double inverse(double tau) const;

private:
    PoissonParams params_;
    VPParams vp_;
    int alpha_q_;
    double frequency_;
    double qp_;
};

[[nodiscard]] ChangeOfVariable make_change_of_variable(const PoissonParams& params, const VPParams& vp);

/// Nodes x_k = k pi / M and cosine roots tau_k = x_k + pi/(2M), M = n-p+alpha_q,
/// stored for k = 2..k0+1 at index k (indices 0, 1 unused).
struct OscillationGrid {
    std::vector<double> x;
    std::vector<double> tau;
    int k0 = 0;  ///< largest k with tau_k <= y1(2 pi)
    int s = 0;   ///< 2 if k0 is odd, 3 if even
};

[[nodiscard]] OscillationGrid make_grid(const ChangeOfVariable& cov);

/// The alternating witness phi*: on [y(tau_i), y(tau_{i+1})], i = s..k0-1,
///   phi*(t) = (-1)^{i+1} * { omega(2 y1(t) - 2 tau_i)/2      up to y(x_{i+1}),
///                             omega(2 tau_{i+1} - 2 y1(t))/2  after it },
/// zero elsewhere on [0, 2 pi), extended 2 pi-periodically.
class ExtremalFunction {
public:
    ExtremalFunction(const Modulus& m, const ChangeOfVariable& cov, const OscillationGrid& grid);

    [[nodiscard]] double operator()(double t) const;

    /// omega(pi / M) / 2, the value at every interior peak.
    [[nodiscard]] double peak_value() const;

    /// y(tau_i), i = s..k0.
    [[nodiscard]] const std::vector<double>& zeros() const noexcept { return zeros_; }
    /// y(x_{i+1}), i = s..k0-1.
    [[nodiscard]] const std::vector<double>& peaks() const noexcept { return peaks_; }
    [[nodiscard]] int first_index() const noexcept { return grid_.s; }

    /// Sign (+1/-1) of phi* on its i-th interval [y(tau_i), y(tau_{i+1})].
    [[nodiscard]] static int interval_sign(int i) noexcept { return (i % 2 == 1) ? 1 : -1; }

private:
    Modulus modulus_;
    ChangeOfVariable cov_;
    OscillationGrid grid_;
    std::vector<double> zeros_;
    std::vector<double> peaks_;
};

/// Samples of phi* on n uniform nodes. Throws UnsupportedError for a
/// modulus not declared convex upwards and ConfigError unless n is a power
/// of two >= max(256, 32(n-p+1)).
[[nodiscard]] SampledPeriodicFunction build_phi_star(const Modulus& m, const ChangeOfVariable& cov,
                                                     const OscillationGrid& grid, std::size_t n);

struct HOmegaReport {
    double max_excess = 0.0;  ///< max over sample pairs of |f(t')-f(t'')| - omega(dist)
    std::size_t worst_shift = 0;
};

/// Pairwise check of |f(t') - f(t'')| <= omega(|t' - t''|) over all sample
/// pairs, with periodic distance. Membership holds when max_excess <= tol.
[[nodiscard]] HOmegaReport check_h_omega(const SampledPeriodicFunction& f, const Modulus& m);

}  // namespace vpsum
