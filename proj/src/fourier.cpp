#include "vpsum/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "vpsum/errors.hpp"
#include "vpsum/simd.hpp"

namespace vpsum {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

SampledPeriodicFunction::SampledPeriodicFunction(std::vector<double> samples)
    : samples_(std::move(samples)) {
    if (samples_.size() < kMinSize || !is_power_of_two(samples_.size()))
        throw ConfigError("sample grid must be a power of two >= 256, got " +
                          std::to_string(samples_.size()));
}

SampledPeriodicFunction SampledPeriodicFunction::sample(const PeriodicFn& f, std::size_t n) {
    std::vector<double> v(n);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f(h * static_cast<double>(j));
    return SampledPeriodicFunction(std::move(v));
}

double SampledPeriodicFunction::step() const noexcept {
    return 2.0 * std::numbers::pi / static_cast<double>(samples_.size());
}

TwiddleTable::TwiddleTable(std::size_t n) : cos_(n), sin_(n) {
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        cos_[j] = std::cos(h * static_cast<double>(j));
        sin_[j] = std::sin(h * static_cast<double>(j));
    }
}

void TwiddleTable::harmonic_rows(long long k, std::span<double> c, std::span<double> s) const {
    const std::size_t n = cos_.size();
    const std::size_t mask = n - 1;
    const auto kk = static_cast<std::size_t>(((k % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                             static_cast<long long>(n));
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = cos_[idx];
        s[j] = sin_[idx];
        idx = (idx + kk) & mask;
    }
}

FourierCoeffs fourier_coeffs(const SampledPeriodicFunction& f, int max_harmonic) {
    const std::size_t n = f.size();
    if (max_harmonic < 0 || 2 * static_cast<std::size_t>(max_harmonic) >= n)
        throw RangeError("fourier_coeffs: harmonic " + std::to_string(max_harmonic) +
                         " aliases on a grid of " + std::to_string(n) + " points");

    FourierCoeffs c;
    c.a.assign(static_cast<std::size_t>(max_harmonic) + 1, 0.0);
    c.b.assign(static_cast<std::size_t>(max_harmonic) + 1, 0.0);
    const auto samples = f.samples();
    c.a0 = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);

    const TwiddleTable table(n);
    std::vector<double> crow(n), srow(n);
    const double norm = 2.0 / static_cast<double>(n);
    for (int k = 1; k <= max_harmonic; ++k) {
        table.harmonic_rows(k, crow, srow);
        const auto [ac, as] = simd::dot_pair(samples, crow, srow);
        c.a[static_cast<std::size_t>(k)] = norm * ac;
        c.b[static_cast<std::size_t>(k)] = norm * as;
    }
    return c;
}

double partial_sum(const FourierCoeffs& c, int k, double x) {
    if (k < 0 || k > c.max_harmonic())
        throw RangeError("partial_sum: order " + std::to_string(k) + " exceeds available " +
                         std::to_string(c.max_harmonic()) + " harmonics");
    double acc = 0.0;
    for (int j = k; j >= 1; --j) {
        const auto i = static_cast<std::size_t>(j);
        acc += c.a[i] * std::cos(j * x) + c.b[i] * std::sin(j * x);
    }
    return c.a0 + acc;
}

double evaluate_normalized(const TrigSeries& s, double x) {
    double acc = 0.0;
    for (std::size_t i = s.cos_amp.size(); i-- > 0;) {
        const double j = static_cast<double>(s.first) + static_cast<double>(i);
        acc += s.cos_amp[i] * std::cos(j * x) + s.sin_amp[i] * std::sin(j * x);
    }
    return acc;
}

std::vector<double> evaluate_normalized_on_grid(const TrigSeries& s, std::size_t m) {
    if (!is_power_of_two(m)) throw ConfigError("evaluation grid must be a power of two");
    std::vector<double> out(m, 0.0);
    const TwiddleTable table(m);
    std::vector<double> crow(m), srow(m);
    for (std::size_t i = 0; i < s.cos_amp.size(); ++i) {
        table.harmonic_rows(static_cast<long long>(s.first) + static_cast<long long>(i), crow, srow);
        simd::axpby_accumulate(out, s.cos_amp[i], crow, s.sin_amp[i], srow);
    }
    return out;
}

}  // namespace vpsum
