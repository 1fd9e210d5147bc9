// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include "vpsum/simd.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace vpsum::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_min_sd(lo, sh));
}

inline __m256d vabs(__m256d v) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    return _mm256_andnot_pd(sign, v);
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

std::pair<double, double> dot_pair(const double* f, const double* c, const double* s,
                                   std::size_t n) {
    __m256d ac = _mm256_setzero_pd();
    __m256d as = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d fv = _mm256_loadu_pd(f + i);
        ac = _mm256_fmadd_pd(fv, _mm256_loadu_pd(c + i), ac);
        as = _mm256_fmadd_pd(fv, _mm256_loadu_pd(s + i), as);
    }
    double rc = hsum(ac);
    double rs = hsum(as);
    for (; i < n; ++i) {
        rc += f[i] * c[i];
        rs += f[i] * s[i];
    }
    return {rc, rs};
}

void axpby_accumulate(double* y, double alpha, const double* x, double beta,
                      const double* z, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), yv);
        yv = _mm256_fmadd_pd(vb, _mm256_loadu_pd(z + i), yv);
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += alpha * x[i] + beta * z[i];
}

double max_abs(const double* a, std::size_t n) {
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, vabs(_mm256_loadu_pd(a + i)));
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::abs(a[i]));
    return r;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    __m256d m0 = _mm256_setzero_pd();
    __m256d m1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        m0 = _mm256_max_pd(m0, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
        m1 = _mm256_max_pd(
            m1, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4))));
    }
    for (; i + 4 <= n; i += 4)
        m0 = _mm256_max_pd(m0, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
    double r = hmax(_mm256_max_pd(m0, m1));
    for (; i < n; ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

double min_sum(const double* a, const double* b, std::size_t n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    __m256d m = _mm256_set1_pd(inf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        m = _mm256_min_pd(m, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    double r = hmin(m);
    for (; i < n; ++i) r = std::min(r, a[i] + b[i]);
    return r;
}

double max_diff(const double* a, const double* b, std::size_t n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    __m256d m = _mm256_set1_pd(-inf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        m = _mm256_max_pd(m, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, a[i] - b[i]);
    return r;
}

}  // namespace vpsum::simd::avx2
