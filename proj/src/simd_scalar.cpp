#include "vpsum/simd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vpsum::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

std::pair<double, double> dot_pair(const double* f, const double* c, const double* s,
                                   std::size_t n) {
    double ac = 0.0;
    double as = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ac += f[i] * c[i];
        as += f[i] * s[i];
    }
    return {ac, as};
}

void axpby_accumulate(double* y, double alpha, const double* x, double beta,
                      const double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i] + beta * z[i];
}

double max_abs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double min_sum(const double* a, const double* b, std::size_t n) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::min(m, a[i] + b[i]);
    return m;
}

double max_diff(const double* a, const double* b, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i] - b[i]);
    return m;
}

}  // namespace vpsum::simd::scalar
