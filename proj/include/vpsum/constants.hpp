#pragma once

#include <optional>

#include "vpsum/kernels.hpp"
#include "vpsum/moduli.hpp"

namespace vpsum {

/// Complete elliptic integral of the first kind, modulus k:
///   K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t) = pi / (2 AGM(1, sqrt(1 - k^2))).
/// Throws DomainError unless 0 <= k < 1.
[[nodiscard]] double elliptic_k(double k);

/// int_0^{2pi} sqrt(1 - 2q^p cos pt + q^{2p}) / (1 - 2q cos t + q^2) dt by
/// adaptive Gauss-Legendre to absolute tolerance `tol`. Throws AccuracyError
/// if the tolerance is not met at the panel limit.
[[nodiscard]] double k_pq_quadrature(int p, double q, double tol = 1e-11);

/// The same constant through the elliptic integral: 4 (1-q^{2p})/(1-q^2) K(q^p).
[[nodiscard]] double k_pq_closed(int p, double q);

/// Remainder exponent: 2 for p = 1, 3 for p >= 2.
[[nodiscard]] int delta_p(int p);

/// e_n(omega) = int_0^{pi/2} omega(2t/n) sin t dt for convex-upwards omega
/// (the weight theta_omega is 1 in that case). Throws UnsupportedError for
/// moduli not declared convex upwards.
[[nodiscard]] double e_n(const Modulus& m, int n);

/// e_n with a real index nu > 0.
[[nodiscard]] double e_functional(const Modulus& m, double nu);

/// int_0^{pi/2} t^alpha sin t dt.
[[nodiscard]] double holder_sine_moment(double alpha);

/// Leading term and remainder scale of an asymptotic formula
///   E = (q^{n-p+1}/p) (principal_coeff + O(1) remainder_coeff).
/// The common factor is kept apart because it underflows for large n.
struct TheoremPrediction {
    double prefactor = 0.0;  ///< q^{n-p+1} / p
    double principal_coeff = 0.0;
    double remainder_coeff = 0.0;
    std::optional<double> bracket_low_coeff;
    std::optional<double> bracket_high_coeff;

    [[nodiscard]] double principal() const { return prefactor * principal_coeff; }
    [[nodiscard]] double remainder_scale() const { return prefactor * remainder_coeff; }
    [[nodiscard]] std::optional<double> bracket_low() const;
    [[nodiscard]] std::optional<double> bracket_high() const;
};

/// principal = K_{p,q}/pi^2 e_{n-p+1}(omega),
/// remainder = omega(pi) / ((1-q)^{delta(p)} (n-p+1)). Requires p < n.
[[nodiscard]] TheoremPrediction theorem1_prediction(const Modulus& m, const PoissonParams& params,
                                                    const VPParams& vp);

/// Hoelder specialization: principal = 2^alpha K_{p,q} I_alpha / (pi^2 (n-p+1)^alpha),
/// I_alpha = int_0^{pi/2} t^alpha sin t dt; remainder = 1/((1-q)^{delta(p)} (n-p+1)).
[[nodiscard]] TheoremPrediction theorem2_prediction(double alpha, const PoissonParams& params,
                                                    const VPParams& vp);

/// Two-sided form: bracket at J = ((1+q^p)/(1+q)) K(q^p) and J = K(q) of
/// (4J/pi^2)((1-q^p)/(1-q)) e_{n-p+1}(omega); principal is the lower end,
/// remainder = omega(1/(n-p+1)) / ((1-q)^{delta(p)} (n-p+1)).
[[nodiscard]] TheoremPrediction theorem3_bracket(const Modulus& m, const PoissonParams& params,
                                                 const VPParams& vp);

}  // namespace vpsum
