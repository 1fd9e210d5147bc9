#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "vpsum/quadrature.hpp"

namespace quad = vpsum::quad;
constexpr double kPi = std::numbers::pi;

TEST(Quadrature, PolynomialIsExact) {
    const auto r = quad::integrate([](double x) { return std::pow(x, 5); }, 0.0, 1.0, 1e-14);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 1.0 / 6.0, 1e-15);
}

TEST(Quadrature, SmoothIntegrand) {
    const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-14);
    EXPECT_NEAR(r.value, 2.0, 1e-14);
}

TEST(Quadrature, EndpointSingularityConverges) {
    const auto r = quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-12);
}

TEST(Quadrature, BreakpointsSplitKinks) {
    const std::array<double, 1> br{0.3};
    const auto r = quad::integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, br, 1e-14);
    EXPECT_NEAR(r.value, 0.29, 1e-14);
    EXPECT_LE(r.panels, 4);
}

TEST(Quadrature, ReportsNonConvergence) {
    const auto r = quad::integrate([](double x) { return std::pow(x, 0.01); }, 0.0, 1.0, 1e-18, 4);
    EXPECT_FALSE(r.converged);
}

TEST(Quadrature, PeriodicTrapezoidIsSpectral) {
    EXPECT_NEAR(quad::periodic_trapezoid([](double t) { return std::cos(t) * std::cos(t); }, 16), kPi, 1e-14);
    EXPECT_NEAR(quad::periodic_trapezoid([](double t) { return std::exp(std::cos(t)); }, 64),
                2.0 * kPi * std::cyl_bessel_i(0.0, 1.0), 1e-13);
}
