#pragma once

// Data-parallel inner loops used by the Fourier, deviation and H_omega code.
//
// Every kernel has a scalar reference implementation (namespace scalar) and,
// on x86-64, an AVX2/FMA variant (namespace avx2). The free functions in
// vpsum::simd dispatch to the best variant supported by the running CPU.
// Reductions may differ from the scalar reference by floating-point
// reassociation only; max/min reductions are exact.

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

namespace vpsum::simd {

enum class Isa { scalar, avx2 };

[[nodiscard]] std::string_view to_string(Isa isa) noexcept;

/// Best instruction set compiled in and supported by this CPU.
[[nodiscard]] Isa detected_isa() noexcept;

/// Variant the dispatching functions currently use. Initialized from the
/// VPSUM_ISA environment variable ("scalar" | "avx2"), else detected_isa().
[[nodiscard]] Isa active_isa() noexcept;

/// Forces a variant. Throws ConfigError if it is unavailable here.
void set_active_isa(Isa isa);

[[nodiscard]] bool is_available(Isa isa) noexcept;

/// Sum of a[i] * b[i]. Spans must have equal length.
[[nodiscard]] double dot(std::span<const double> a, std::span<const double> b);

/// (sum f[i]*c[i], sum f[i]*s[i]) in one pass.
[[nodiscard]] std::pair<double, double> dot_pair(std::span<const double> f,
                                                 std::span<const double> c,
                                                 std::span<const double> s);

/// y[i] += alpha * x[i] + beta * z[i].
void axpby_accumulate(std::span<double> y, double alpha, std::span<const double> x,
                      double beta, std::span<const double> z);

/// max |a[i]|; 0 for an empty span.
[[nodiscard]] double max_abs(std::span<const double> a);

/// max |a[i] - b[i]|; 0 for empty spans.
[[nodiscard]] double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// min (a[i] + b[i]); +inf for empty spans.
[[nodiscard]] double min_sum(std::span<const double> a, std::span<const double> b);

/// max (a[i] - b[i]); -inf for empty spans.
[[nodiscard]] double max_diff(std::span<const double> a, std::span<const double> b);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
std::pair<double, double> dot_pair(const double* f, const double* c, const double* s,
                                   std::size_t n);
void axpby_accumulate(double* y, double alpha, const double* x, double beta,
                      const double* z, std::size_t n);
double max_abs(const double* a, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
double min_sum(const double* a, const double* b, std::size_t n);
double max_diff(const double* a, const double* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
std::pair<double, double> dot_pair(const double* f, const double* c, const double* s,
                                   std::size_t n);
void axpby_accumulate(double* y, double alpha, const double* x, double beta,
                      const double* z, std::size_t n);
double max_abs(const double* a, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
double min_sum(const double* a, const double* b, std::size_t n);
double max_diff(const double* a, const double* b, std::size_t n);
}  // namespace avx2

}  // namespace vpsum::simd
