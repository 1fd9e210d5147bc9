#include "vpsum/sums.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vpsum/errors.hpp"
#include "vpsum/simd.hpp"

namespace vpsum {

double deviation_weight(const VPParams& vp, int j) noexcept {
    const int lo = vp.n() - vp.p();
    if (j <= lo) return 0.0;
    if (j >= vp.n()) return 1.0;
    return static_cast<double>(j - lo) / static_cast<double>(vp.p());
}

double vp_sum(const FourierCoeffs& c, const VPParams& vp, double x) {
    if (vp.n() - 1 > c.max_harmonic())
        throw RangeError("vp_sum: need harmonics up to " + std::to_string(vp.n() - 1) + ", have " +
                         std::to_string(c.max_harmonic()));
    double acc = 0.0;
    for (int k = vp.n() - vp.p(); k <= vp.n() - 1; ++k) acc += partial_sum(c, k, x);
    return acc / static_cast<double>(vp.p());
}

SampledPeriodicFunction deviation_direct(const SampledPeriodicFunction& f, const VPParams& vp) {
    const int degree = vp.n() - 1;
    const auto c = fourier_coeffs(f, degree);

    TrigSeries v;
    v.first = 1;
    v.cos_amp.resize(static_cast<std::size_t>(std::max(degree, 0)));
    v.sin_amp.resize(v.cos_amp.size());
    for (int j = 1; j <= degree; ++j) {
        const double keep = 1.0 - deviation_weight(vp, j);
        v.cos_amp[static_cast<std::size_t>(j - 1)] = keep * c.a[static_cast<std::size_t>(j)];
        v.sin_amp[static_cast<std::size_t>(j - 1)] = keep * c.b[static_cast<std::size_t>(j)];
    }
    auto values = evaluate_normalized_on_grid(v, f.size());
    const auto samples = f.samples();
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = samples[i] - (c.a0 + values[i]);
    return SampledPeriodicFunction(std::move(values));
}

std::vector<double> deviation_kernel(const PoissonParams& params, const VPParams& vp,
                                     std::size_t grid) {
    const double q = params.q();
    const int p = vp.p();
    const double qp = std::pow(q, p);
    const int gap = vp.gap();
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    std::vector<double> k(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = h * static_cast<double>(j);
        const double z = z_q(q, t);
        const double weight = z * z / z_q(qp, p * t);
        const double arg = gap * t + 2.0 * theta_q(q, t) - theta_q(qp, p * t) + params.phase();
        k[j] = weight * std::cos(arg);
    }
    return k;
}

double deviation_integral(const PeriodicFn& phi, const PoissonParams& params, const VPParams& vp,
                          double x, std::size_t grid) {
    require_strict(vp);
    const auto gap = static_cast<std::size_t>(vp.gap());
    if (grid == 0) {
        grid = next_power_of_two(std::max<std::size_t>(1024, 64 * gap));
    } else if (grid < 16 * gap) {
        throw ConfigError("deviation_integral: grid of " + std::to_string(grid) +
                          " points under-resolves frequency " + std::to_string(gap) +
                          " (need >= " + std::to_string(16 * gap) + ")");
    }
    const auto kernel = deviation_kernel(params, vp, grid);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    const double base = phi(x);
    double acc = 0.0;
    for (std::size_t j = 0; j < grid; ++j)
        acc += (phi(x + h * static_cast<double>(j)) - base) * kernel[j];
    const double q = params.q();
    return std::pow(q, vp.gap()) / (std::numbers::pi * vp.p()) * acc * h;
}

int deviation_spectrum_degree(const PoissonParams& params, const VPParams& vp, double tail_tol) {
    return vp.gap() + tail_cutoff(params.q(), tail_tol);
}

TrigSeries deviation_spectrum(const FourierCoeffs& phi, const PoissonParams& params,
                              const VPParams& vp, double tail_tol) {
    const int gap = vp.gap();
    const int last = deviation_spectrum_degree(params, vp, tail_tol);
    if (last > phi.max_harmonic())
        throw RangeError("deviation_spectrum: need phi harmonics up to " + std::to_string(last) +
                         ", have " + std::to_string(phi.max_harmonic()));

    const double q = params.q();
    const double cph = std::cos(params.phase());
    const double sph = std::sin(params.phase());
    TrigSeries s;
    s.first = gap;
    s.scale = std::pow(q, gap);
    s.cos_amp.resize(static_cast<std::size_t>(last - gap + 1));
    s.sin_amp.resize(s.cos_amp.size());
    double damp = 1.0;
    for (int j = gap; j <= last; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        const auto i = static_cast<std::size_t>(j - gap);
        const double w = deviation_weight(vp, j) * damp;
        s.cos_amp[i] = w * (phi.a[jj] * cph - phi.b[jj] * sph);
        s.sin_amp[i] = w * (phi.a[jj] * sph + phi.b[jj] * cph);
        damp *= q;
    }
    return s;
}

namespace {

std::pair<double, std::size_t> grid_max(const TrigSeries& s, std::size_t m) {
    const auto v = evaluate_normalized_on_grid(s, m);
    std::size_t best = 0;
    double best_val = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > best_val) {
            best_val = std::abs(v[i]);
            best = i;
        }
    }
    return {best_val, best};
}

}  // namespace

SupEstimate sup_norm(const TrigSeries& s, std::size_t initial_grid, double rel_tol,
                     std::size_t max_grid) {
    std::size_t m = next_power_of_two(std::max<std::size_t>(initial_grid, 8));
    double prev = grid_max(s, m).first;
    SupEstimate est;
    while (true) {
        const std::size_t m2 = 2 * m;
        const auto [cur, idx] = grid_max(s, m2);
        ++est.refinements;
        const bool settled = std::abs(cur - prev) <= rel_tol * cur || cur == 0.0;
        if (settled || m2 >= max_grid) {
            const double h = 2.0 * std::numbers::pi / static_cast<double>(m2);
            const double x0 = h * static_cast<double>(idx);
            const auto [x, neg] = boost::math::tools::brent_find_minima(
                [&s](double t) { return -std::abs(evaluate_normalized(s, t)); }, x0 - h, x0 + h, 40);
            est.value = std::max(cur, -neg);
            est.argmax = -neg > cur ? x - 2.0 * std::numbers::pi * std::floor(x / (2.0 * std::numbers::pi)) : x0;
            est.grid = m2;
            return est;
        }
        m = m2;
        prev = cur;
    }
}

}  // namespace vpsum
