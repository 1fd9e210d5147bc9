#include "vpsum/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vpsum/errors.hpp"
#include "vpsum/simd.hpp"

namespace vpsum {

PoissonParams::PoissonParams(double q, double beta) : q_(q), beta_(0.0) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("Poisson parameter q must lie in (0, 1)");
    if (!std::isfinite(beta)) throw DomainError("Poisson parameter beta must be finite");
    double b = std::fmod(beta, 4.0);
    if (b < 0.0) b += 4.0;
    if (b >= 4.0) b = 0.0;
    beta_ = b;
}

double PoissonParams::phase() const noexcept { return beta_ * std::numbers::pi / 2.0; }

VPParams::VPParams(int n, int p) : n_(n), p_(p) {
    if (p < 1 || n < 1) throw DomainError("VPParams: n and p must be positive");
    if (p > n) throw DomainError("VPParams: p must not exceed n");
}

void require_strict(const VPParams& vp) {
    if (vp.p() >= vp.n())
        throw DomainError("operation requires p < n (got n = " + std::to_string(vp.n()) +
                          ", p = " + std::to_string(vp.p()) + ")");
}

double poisson_kernel(const PoissonParams& params, double t) {
    const double q = params.q();
    const double c = std::cos(t);
    const double denom = 1.0 - 2.0 * q * c + q * q;
    const double re = q * (c - q) / denom;
    const double im = q * std::sin(t) / denom;
    const double ph = params.phase();
    return std::cos(ph) * re - std::sin(ph) * im;
}

double z_q(double q, double t) { return 1.0 / std::sqrt(1.0 - 2.0 * q * std::cos(t) + q * q); }

double theta_q(double q, double t) { return std::atan2(q * std::sin(t), 1.0 - q * std::cos(t)); }

double poisson_tail(const PoissonParams& params, int m, double t) {
    if (m < 1) throw DomainError("poisson_tail: m must be >= 1");
    const double q = params.q();
    return std::pow(q, m) * z_q(q, t) * std::cos(m * t + theta_q(q, t) + params.phase());
}

double block_sum(const PoissonParams& params, const VPParams& vp, double t) {
    const double q = params.q();
    const int p = vp.p();
    const int gap = vp.gap();
    const double qp = std::pow(q, p);
    const double ratio = z_q(q, t) / z_q(qp, p * t);
    const double arg = gap * t + 2.0 * theta_q(q, t) - theta_q(qp, p * t) + params.phase();
    return std::pow(q, gap) * ratio * std::cos(arg);
}

int tail_cutoff(double q, double tol) {
    // q^K / (1 - q) < tol
    const double k = std::log(tol * (1.0 - q)) / std::log(q);
    return std::max(1, static_cast<int>(std::floor(k)) + 1);
}

FourierCoeffs poisson_coeffs(const FourierCoeffs& phi, const PoissonParams& params, double a0) {
    FourierCoeffs out;
    out.a0 = a0;
    out.a.assign(phi.a.size(), 0.0);
    out.b.assign(phi.b.size(), 0.0);
    const double cph = std::cos(params.phase());
    const double sph = std::sin(params.phase());
    double damp = 1.0;
    for (std::size_t k = 1; k < phi.a.size(); ++k) {
        damp *= params.q();
        out.a[k] = damp * (phi.a[k] * cph - phi.b[k] * sph);
        out.b[k] = damp * (phi.a[k] * sph + phi.b[k] * cph);
    }
    return out;
}

namespace {

void require_grid(std::size_t grid) {
    if (grid < SampledPeriodicFunction::kMinSize || !is_power_of_two(grid))
        throw ConfigError("quadrature grid must be a power of two >= 256, got " +
                          std::to_string(grid));
}

int spectral_degree(std::size_t grid, double q) {
    return std::min(static_cast<int>(grid / 2) - 1, tail_cutoff(q));
}

}  // namespace

double poisson_integral(const PeriodicFn& phi, const PoissonParams& params, double a0, double x,
                        std::size_t grid, IntegralRoute route) {
    require_grid(grid);
    if (route == IntegralRoute::spectral) {
        const auto samples = SampledPeriodicFunction::sample(phi, grid);
        const auto c = poisson_coeffs(fourier_coeffs(samples, spectral_degree(grid, params.q())),
                                      params, a0);
        return partial_sum(c, c.max_harmonic(), x);
    }
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    double acc = 0.0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = h * static_cast<double>(j);
        acc += phi(x + t) * poisson_kernel(params, t);
    }
    return a0 + acc * h / std::numbers::pi;
}

SampledPeriodicFunction poisson_integral(const SampledPeriodicFunction& phi,
                                         const PoissonParams& params, double a0) {
    const auto c = poisson_coeffs(fourier_coeffs(phi, spectral_degree(phi.size(), params.q())),
                                  params, a0);
    TrigSeries s;
    s.first = 1;
    s.cos_amp.assign(c.a.begin() + 1, c.a.end());
    s.sin_amp.assign(c.b.begin() + 1, c.b.end());
    auto values = evaluate_normalized_on_grid(s, phi.size());
    for (double& v : values) v += a0;
    return SampledPeriodicFunction(std::move(values));
}

SampledPeriodicFunction poisson_integral_quadrature(const SampledPeriodicFunction& phi,
                                                    const PoissonParams& params, double a0) {
    const std::size_t n = phi.size();
    const double h = phi.step();
    std::vector<double> kernel(n);
    for (std::size_t j = 0; j < n; ++j) kernel[j] = poisson_kernel(params, h * static_cast<double>(j));

    std::vector<double> doubled(2 * n);
    std::copy(phi.samples().begin(), phi.samples().end(), doubled.begin());
    std::copy(phi.samples().begin(), phi.samples().end(), doubled.begin() + static_cast<long>(n));

    std::vector<double> out(n);
    const std::span<const double> d(doubled);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a0 + simd::dot(d.subspan(i, n), kernel) * h / std::numbers::pi;
    return SampledPeriodicFunction(std::move(out));
}

}  // namespace vpsum
