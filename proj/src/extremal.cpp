#include "vpsum/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "vpsum/errors.hpp"
#include "vpsum/simd.hpp"

namespace vpsum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// floor/ceil that do not flip on values like 2.9999999999999996 meant as 3.
double robust_floor(double x) { return std::floor(x + 1e-12 * std::max(1.0, std::abs(x))); }
double robust_ceil(double x) { return std::ceil(x - 1e-12 * std::max(1.0, std::abs(x))); }

}  // namespace

int alpha_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("alpha_q: q must lie in (0, 1)");
    return static_cast<int>(robust_floor(3.0 * q / (1.0 - q))) + 2;
}

int min_admissible_gap(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("min_admissible_gap: q must lie in (0, 1)");
    return static_cast<int>(robust_ceil(6.0 / (1.0 - q)));
}

bool is_admissible(const PoissonParams& params, const VPParams& vp) {
    return vp.n() - vp.p() >= min_admissible_gap(params.q());
}

ChangeOfVariable::ChangeOfVariable(const PoissonParams& params, const VPParams& vp)
    : params_(params), vp_(vp), alpha_q_(vpsum::alpha_q(params.q())),
      frequency_(static_cast<double>(vp.n() - vp.p() + alpha_q_)),
      qp_(std::pow(params.q(), vp.p())) {
    if (!is_admissible(params, vp)) {
        const int need = min_admissible_gap(params.q());
        throw PreconditionError("n - p = " + std::to_string(vp.n() - vp.p()) +
                                    " violates n - p >= 6/(1-q) for q = " + std::to_string(params.q()) +
                                    "; need n - p >= " + std::to_string(need),
                                need);
    }
}

double ChangeOfVariable::forward(double t) const {
    const double q = params_.q();
    const double p = static_cast<double>(vp_.p());
    const double shift = 2.0 * theta_q(q, t) - theta_q(qp_, p * t) +
                         static_cast<double>(1 - alpha_q_) * t + params_.phase();
    return t + shift / frequency_;
}

double ChangeOfVariable::derivative(double t) const {
    const double q = params_.q();
    const double p = static_cast<double>(vp_.p());
    const double z1 = z_q(q, t);
    const double zp = z_q(qp_, p * t);
    const double d1 = q * (std::cos(t) - q) * z1 * z1;
    const double dp = p * qp_ * (std::cos(p * t) - qp_) * zp * zp;
    return 1.0 + (2.0 * d1 - dp + static_cast<double>(1 - alpha_q_)) / frequency_;
}

double ChangeOfVariable::inverse(double tau) const {
    // With 1/3 < y1' < 1, y(tau) lies between y1(0) + (tau - y1(0)) and y1(0) + 3(tau - y1(0)).
    const double y0 = forward(0.0);
    const double d = tau - y0;
    double lo = d >= 0.0 ? d : 3.0 * d;
    double hi = d >= 0.0 ? 3.0 * d : d;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (forward(mid) < tau)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ChangeOfVariable make_change_of_variable(const PoissonParams& params, const VPParams& vp) {
    return ChangeOfVariable(params, vp);
}

OscillationGrid make_grid(const ChangeOfVariable& cov) {
    // y1(2 pi) M / pi = 2(n-p+1) + beta/2 and tau_k M / pi = k + 1/2, hence
    // k0 = 2(n-p+1) + floor((beta - 1)/2), the tie beta = 1 included.
    OscillationGrid g;
    g.k0 = 2 * cov.vp().gap() + static_cast<int>(std::floor(0.5 * (cov.params().beta() - 1.0)));
    g.s = (g.k0 % 2 != 0) ? 2 : 3;
    const double m = cov.frequency();
    const auto size = static_cast<std::size_t>(g.k0 + 2);
    g.x.assign(size, 0.0);
    g.tau.assign(size, 0.0);
    for (int k = 2; k <= g.k0 + 1; ++k) {
        g.x[static_cast<std::size_t>(k)] = static_cast<double>(k) * std::numbers::pi / m;
        g.tau[static_cast<std::size_t>(k)] = (static_cast<double>(k) + 0.5) * std::numbers::pi / m;
    }
    return g;
}

ExtremalFunction::ExtremalFunction(const Modulus& m, const ChangeOfVariable& cov,
                                   const OscillationGrid& grid)
    : modulus_(m), cov_(cov), grid_(grid) {
    for (int i = grid_.s; i <= grid_.k0; ++i)
        zeros_.push_back(cov_.inverse(grid_.tau[static_cast<std::size_t>(i)]));
    for (int i = grid_.s; i < grid_.k0; ++i)
        peaks_.push_back(cov_.inverse(grid_.x[static_cast<std::size_t>(i + 1)]));
}

double ExtremalFunction::operator()(double t) const {
    const double u = t - kTwoPi * std::floor(t / kTwoPi);
    if (zeros_.size() < 2 || u < zeros_.front() || u >= zeros_.back()) return 0.0;
    const auto idx = static_cast<std::size_t>(
        std::upper_bound(zeros_.begin(), zeros_.end(), u) - zeros_.begin() - 1);
    const int i = grid_.s + static_cast<int>(idx);
    const double y = cov_.forward(u);
    const double v = u <= peaks_[idx]
                         ? 0.5 * modulus_(2.0 * y - 2.0 * grid_.tau[static_cast<std::size_t>(i)])
                         : 0.5 * modulus_(2.0 * grid_.tau[static_cast<std::size_t>(i + 1)] - 2.0 * y);
    return interval_sign(i) * v;
}

double ExtremalFunction::peak_value() const {
    return 0.5 * modulus_(std::numbers::pi / cov_.frequency());
}

SampledPeriodicFunction build_phi_star(const Modulus& m, const ChangeOfVariable& cov,
                                       const OscillationGrid& grid, std::size_t n) {
    if (!m.convex_upwards())
        throw UnsupportedError("phi* is defined for convex-upwards moduli only (modulus '" + m.name() +
                               "')");
    const auto need = std::max<std::size_t>(SampledPeriodicFunction::kMinSize,
                                            32 * static_cast<std::size_t>(cov.vp().gap()));
    if (!is_power_of_two(n) || n < need)
        throw ConfigError("build_phi_star: grid must be a power of two >= " + std::to_string(need) +
                          ", got " + std::to_string(n));
    const ExtremalFunction phi(m, cov, grid);
    std::vector<double> v(n);
    const double h = kTwoPi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = phi(h * static_cast<double>(j));
    return SampledPeriodicFunction(std::move(v));
}

HOmegaReport check_h_omega(const SampledPeriodicFunction& f, const Modulus& m) {
    const std::size_t n = f.size();
    const auto s = f.samples();
    std::vector<double> doubled(2 * n);
    std::copy(s.begin(), s.end(), doubled.begin());
    std::copy(s.begin(), s.end(), doubled.begin() + static_cast<std::ptrdiff_t>(n));
    const std::span<const double> base(doubled.data(), n);

    HOmegaReport r;
    r.max_excess = -std::numeric_limits<double>::infinity();
    // Shift d pairs every sample with the one d steps ahead; d and n - d give
    // the same unordered pairs, so d <= n/2 covers everything.
    for (std::size_t d = 1; d <= n / 2; ++d) {
        const double diff = simd::max_abs_diff(base, std::span<const double>(doubled.data() + d, n));
        const double excess = diff - m(f.step() * static_cast<double>(d));
        if (excess > r.max_excess) {
            r.max_excess = excess;
            r.worst_shift = d;
        }
    }
    return r;
}

}  // namespace vpsum
