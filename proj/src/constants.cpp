#include "vpsum/constants.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "vpsum/errors.hpp"
#include "vpsum/quadrature.hpp"

namespace vpsum {

double elliptic_k(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic_k: modulus must lie in [0, 1)");
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (a + b);
}

double k_pq_closed(int p, double q) {
    if (p < 1) throw DomainError("k_pq: p must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("k_pq: q must lie in (0, 1)");
    const double qp = std::pow(q, p);
    return 4.0 * (1.0 - qp * qp) / (1.0 - q * q) * elliptic_k(qp);
}

double k_pq_quadrature(int p, double q, double tol) {
    if (p < 1) throw DomainError("k_pq: p must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("k_pq: q must lie in (0, 1)");
    const double qp = std::pow(q, p);
    // 1 - 2r cos x + r^2 = (1 - r)^2 + 4 r sin^2(x/2), cancellation-free near x = 0.
    auto integrand = [=](double t) {
        const double sp = std::sin(0.5 * p * t);
        const double s1 = std::sin(0.5 * t);
        const double num = (1.0 - qp) * (1.0 - qp) + 4.0 * qp * sp * sp;
        const double den = (1.0 - q) * (1.0 - q) + 4.0 * q * s1 * s1;
        return std::sqrt(num) / den;
    };
    // Even about pi: integrate one half.
    const auto r = quad::integrate(integrand, 0.0, std::numbers::pi, 0.5 * tol);
    if (!r.converged)
        throw AccuracyError("k_pq_quadrature: tolerance " + std::to_string(tol) +
                            " not reached (p = " + std::to_string(p) + ", q = " + std::to_string(q) + ")");
    return 2.0 * r.value;
}

int delta_p(int p) {
    if (p < 1) throw DomainError("delta_p: p must be >= 1");
    return p == 1 ? 2 : 3;
}

double e_functional(const Modulus& m, double nu) {
    if (!m.convex_upwards())
        throw UnsupportedError("e_n is implemented for convex-upwards moduli only (modulus '" +
                               m.name() + "')");
    if (!(nu > 0.0)) throw DomainError("e_n: index must be positive");
    auto integrand = [&](double t) { return m(2.0 * t / nu) * std::sin(t); };
    std::array<double, 1> breaks{};
    std::span<const double> br;
    if (const auto bp = m.breakpoint()) {
        breaks[0] = 0.5 * nu * *bp;
        br = breaks;
    }
    const auto r = quad::integrate(integrand, 0.0, std::numbers::pi / 2.0, br, 1e-13);
    if (!r.converged) throw AccuracyError("e_n: quadrature did not converge");
    return r.value;
}

double e_n(const Modulus& m, int n) {
    if (n < 1) throw DomainError("e_n: n must be >= 1");
    return e_functional(m, static_cast<double>(n));
}

double holder_sine_moment(double alpha) {
    const auto r = quad::integrate([alpha](double t) { return std::pow(t, alpha) * std::sin(t); }, 0.0,
                                   std::numbers::pi / 2.0, 1e-15);
    return r.value;
}

std::optional<double> TheoremPrediction::bracket_low() const {
    if (!bracket_low_coeff) return std::nullopt;
    return prefactor * *bracket_low_coeff;
}

std::optional<double> TheoremPrediction::bracket_high() const {
    if (!bracket_high_coeff) return std::nullopt;
    return prefactor * *bracket_high_coeff;
}

namespace {

double prefactor(const PoissonParams& params, const VPParams& vp) {
    return std::pow(params.q(), vp.gap()) / static_cast<double>(vp.p());
}

double remainder_denominator(const PoissonParams& params, const VPParams& vp) {
    return std::pow(1.0 - params.q(), delta_p(vp.p())) * static_cast<double>(vp.gap());
}

}  // namespace

TheoremPrediction theorem1_prediction(const Modulus& m, const PoissonParams& params,
                                      const VPParams& vp) {
    require_strict(vp);
    TheoremPrediction t;
    t.prefactor = prefactor(params, vp);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    t.principal_coeff = k_pq_closed(vp.p(), params.q()) / pi2 * e_n(m, vp.gap());
    t.remainder_coeff = m(std::numbers::pi) / remainder_denominator(params, vp);
    return t;
}

TheoremPrediction theorem2_prediction(double alpha, const PoissonParams& params,
                                      const VPParams& vp) {
    require_strict(vp);
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("theorem 2 needs 0 < alpha < 1");
    TheoremPrediction t;
    t.prefactor = prefactor(params, vp);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double gap_pow = std::pow(static_cast<double>(vp.gap()), alpha);
    t.principal_coeff = std::pow(2.0, alpha) / pi2 * k_pq_closed(vp.p(), params.q()) *
                        holder_sine_moment(alpha) / gap_pow;
    t.remainder_coeff = 1.0 / remainder_denominator(params, vp);
    return t;
}

TheoremPrediction theorem3_bracket(const Modulus& m, const PoissonParams& params,
                                   const VPParams& vp) {
    require_strict(vp);
    const double q = params.q();
    const double qp = std::pow(q, vp.p());
    const double j_low = (1.0 + qp) / (1.0 + q) * elliptic_k(qp);
    const double j_high = elliptic_k(q);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double common = 4.0 / pi2 * (1.0 - qp) / (1.0 - q) * e_n(m, vp.gap());

    TheoremPrediction t;
    t.prefactor = prefactor(params, vp);
    t.bracket_low_coeff = common * j_low;
    t.bracket_high_coeff = common * j_high;
    t.principal_coeff = *t.bracket_low_coeff;
    t.remainder_coeff = m(1.0 / static_cast<double>(vp.gap())) / remainder_denominator(params, vp);
    return t;
}

}  // namespace vpsum
