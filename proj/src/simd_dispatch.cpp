#include "vpsum/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "vpsum/errors.hpp"

namespace vpsum::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(VPSUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() noexcept {
    if (const char* env = std::getenv("VPSUM_ISA")) {
        const std::string v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && cpu_has_avx2()) return Isa::avx2;
    }
    return detected_isa();
}

std::atomic<Isa>& active() noexcept {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw ConfigError("simd kernel: span lengths differ");
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::scalar: break;
    }
    return "scalar";
}

Isa detected_isa() noexcept { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

bool is_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!is_available(isa))
        throw ConfigError("instruction set '" + std::string(to_string(isa)) +
                          "' is not available on this machine");
    active().store(isa, std::memory_order_relaxed);
}

#if defined(VPSUM_HAVE_AVX2)
#define VPSUM_DISPATCH(fn, ...) \
    (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define VPSUM_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double dot(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size());
    return VPSUM_DISPATCH(dot, a.data(), b.data(), a.size());
}

std::pair<double, double> dot_pair(std::span<const double> f, std::span<const double> c,
                                   std::span<const double> s) {
    require_same_size(f.size(), c.size());
    require_same_size(f.size(), s.size());
    return VPSUM_DISPATCH(dot_pair, f.data(), c.data(), s.data(), f.size());
}

void axpby_accumulate(std::span<double> y, double alpha, std::span<const double> x,
                      double beta, std::span<const double> z) {
    require_same_size(y.size(), x.size());
    require_same_size(y.size(), z.size());
    VPSUM_DISPATCH(axpby_accumulate, y.data(), alpha, x.data(), beta, z.data(), y.size());
}

double max_abs(std::span<const double> a) { return VPSUM_DISPATCH(max_abs, a.data(), a.size()); }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size());
    return VPSUM_DISPATCH(max_abs_diff, a.data(), b.data(), a.size());
}

double min_sum(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size());
    return VPSUM_DISPATCH(min_sum, a.data(), b.data(), a.size());
}

double max_diff(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size());
    return VPSUM_DISPATCH(max_diff, a.data(), b.data(), a.size());
}

#undef VPSUM_DISPATCH

}  // namespace vpsum::simd
