#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace vpsum::testing {

/// Seeded source for hand-rolled property checks.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

    std::vector<double> vector(std::size_t n, double lo = -1.0, double hi = 1.0) {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    std::mt19937_64 rng_;
};

/// Runs `body(gen, i)` for `count` cases from one seed.
template <class F>
void for_all(std::uint64_t seed, int count, F&& body) {
    Gen g(seed);
    for (int i = 0; i < count; ++i) body(g, i);
}

/// sum_{k=from}^{from+terms-1} q^k cos(k t + beta pi/2), Kahan-compensated.
inline double cosine_series(double q, double beta, int from, double t, int terms = 2000) {
    const double c = beta * std::numbers::pi / 2.0;
    double sum = 0.0, comp = 0.0;
    double qk = std::pow(q, from);
    for (int k = from; k < from + terms; ++k) {
        const double y = qk * std::cos(k * t + c) - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        qk *= q;
        if (qk == 0.0) break;
    }
    return sum;
}

/// A random trigonometric polynomial of degree <= `degree`.
struct TrigPoly {
    double a0 = 0.0;
    std::vector<double> a, b;  ///< index k = 1..degree at k-1

    static TrigPoly random(Gen& g, int degree) {
        TrigPoly p;
        p.a0 = g.uniform(-1.0, 1.0);
        p.a = g.vector(static_cast<std::size_t>(degree));
        p.b = g.vector(static_cast<std::size_t>(degree));
        return p;
    }
    int degree() const { return static_cast<int>(a.size()); }
    double operator()(double x) const { return truncated(x, degree()); }
    double truncated(double x, int k) const {
        double s = a0;
        for (int j = 1; j <= k && j <= degree(); ++j)
            s += a[static_cast<std::size_t>(j - 1)] * std::cos(j * x) + b[static_cast<std::size_t>(j - 1)] * std::sin(j * x);
        return s;
    }
};

}  // namespace vpsum::testing
