#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace vpsum {

using PeriodicFn = std::function<double(double)>;

/// Uniform samples f(2*pi*j/N), j = 0..N-1, of a 2*pi-periodic function.
/// N is a power of two, at least 256.
class SampledPeriodicFunction {
public:
    static constexpr std::size_t kMinSize = 256;

    /// Throws ConfigError unless the length is a power of two >= kMinSize.
    explicit SampledPeriodicFunction(std::vector<double> samples);

    [[nodiscard]] static SampledPeriodicFunction sample(const PeriodicFn& f, std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
    [[nodiscard]] double operator[](std::size_t j) const { return samples_[j]; }
    [[nodiscard]] double step() const noexcept;
    [[nodiscard]] double node(std::size_t j) const noexcept { return step() * static_cast<double>(j); }

private:
    std::vector<double> samples_;
};

[[nodiscard]] bool is_power_of_two(std::size_t n) noexcept;
[[nodiscard]] std::size_t next_power_of_two(std::size_t n) noexcept;

/// Cosine/sine coefficients of a real trigonometric series.
///
/// `a0` is the mean value itself (no a0/2 convention). `a[k]`, `b[k]` hold
/// harmonic k for k = 1..max_harmonic(); index 0 is unused and zero.
struct FourierCoeffs {
    double a0 = 0.0;
    std::vector<double> a{0.0};
    std::vector<double> b{0.0};

    [[nodiscard]] int max_harmonic() const noexcept { return static_cast<int>(a.size()) - 1; }
};

/// Discrete Fourier coefficients up to harmonic K by uniform-grid sums.
/// Exact for trigonometric polynomials of degree < N/2. Throws RangeError
/// (aliasing) unless 2K < N.
[[nodiscard]] FourierCoeffs fourier_coeffs(const SampledPeriodicFunction& f, int max_harmonic);

/// A0 + sum_{j=1}^{k} (a_j cos jx + b_j sin jx). Throws RangeError if k > K.
[[nodiscard]] double partial_sum(const FourierCoeffs& c, int k, double x);

/// Compact trigonometric series
///   scale * sum_{j=first}^{first+size-1} (cos_amp[i] cos jx + sin_amp[i] sin jx),
/// with i = j - first. Keeping the amplitudes O(1) and the (possibly tiny)
/// common factor separate avoids underflow for q^{n-p+1}-sized deviations.
struct TrigSeries {
    int first = 1;
    double scale = 1.0;
    std::vector<double> cos_amp;
    std::vector<double> sin_amp;

    [[nodiscard]] int last() const noexcept { return first + static_cast<int>(cos_amp.size()) - 1; }
};

/// Normalized value (without `scale`) at x.
[[nodiscard]] double evaluate_normalized(const TrigSeries& s, double x);

/// Normalized values at x_j = 2*pi*j/M, j < M (M power of two).
[[nodiscard]] std::vector<double> evaluate_normalized_on_grid(const TrigSeries& s, std::size_t m);

/// cos/sin of 2*pi*j/N for j < N; rows for harmonic k read index (k*j) mod N.
class TwiddleTable {
public:
    explicit TwiddleTable(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return cos_.size(); }

    /// Fills cos(k t_j), sin(k t_j) for the full grid.
    void harmonic_rows(long long k, std::span<double> c, std::span<double> s) const;

private:
    std::vector<double> cos_;
    std::vector<double> sin_;
};

}  // namespace vpsum
