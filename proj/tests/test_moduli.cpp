#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "vpsum/errors.hpp"
#include "vpsum/moduli.hpp"

using namespace vpsum;
using vpsum::testing::for_all;
using vpsum::testing::Gen;

namespace {

std::vector<double> uniform_grid(std::size_t n, double hi) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = hi * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

std::vector<Modulus> builtins() {
    return {make_holder(0.5), make_holder(0.1), make_holder(0.9),
            make_paper_modulus(PaperFamily::log_power, 0.3),
            make_paper_modulus(PaperFamily::power_log, 1.0),
            make_paper_modulus(PaperFamily::power_log, 0.4),
            make_paper_modulus(PaperFamily::inverse_log, 1.0),
            make_paper_modulus(PaperFamily::inverse_log, 0.5),
            make_linear()};
}

}  // namespace

TEST(Holder, Values) {
    const auto w = make_holder(0.5);
    EXPECT_DOUBLE_EQ(w(4.0), 2.0);
    EXPECT_EQ(w(0.0), 0.0);
    EXPECT_DOUBLE_EQ(make_holder(0.3)(0.2), std::pow(0.2, 0.3));
    EXPECT_TRUE(w.convex_upwards());
    EXPECT_EQ(w.family(), ModulusFamily::holder);
}

TEST(Holder, RejectsOutOfRangeExponent) {
    EXPECT_THROW((void)make_holder(0.0), DomainError);
    EXPECT_THROW((void)make_holder(1.0), DomainError);
    EXPECT_THROW((void)make_holder(-0.5), DomainError);
}

TEST(Holder, ScalingProperty) {
    for_all(21, 200, [](Gen& g, int) {
        const double alpha = g.uniform(0.05, 0.95), c = g.uniform(0.01, 10.0), t = g.uniform(0.001, 5.0);
        const auto w = make_holder(alpha);
        EXPECT_NEAR(w(c * t), std::pow(c, alpha) * w(t), 1e-13 * w(c * t));
    });
}

TEST(PaperFamilies, BreakpointContinuity) {
    const auto pl = make_paper_modulus(PaperFamily::power_log, 1.0);
    EXPECT_NEAR(pl(std::exp(-1.0)), 1.0 / std::numbers::e, 1e-15);
    EXPECT_NEAR(pl(5.0), 1.0 / std::numbers::e, 1e-15);
    const auto il = make_paper_modulus(PaperFamily::inverse_log, 1.0);
    EXPECT_NEAR(il(std::exp(-2.0)), 0.5, 1e-15);
    EXPECT_NEAR(il(1.0), 0.5, 1e-15);
    EXPECT_EQ(make_paper_modulus(PaperFamily::log_power, 0.5)(0.0), 0.0);
    EXPECT_NEAR(make_paper_modulus(PaperFamily::log_power, 0.5)(3.0), std::sqrt(std::log(4.0)), 1e-15);
}

TEST(PaperFamilies, RangeChecks) {
    EXPECT_THROW((void)make_paper_modulus(PaperFamily::log_power, 1.0), DomainError);
    EXPECT_NO_THROW((void)make_paper_modulus(PaperFamily::power_log, 1.0));
    EXPECT_THROW((void)make_paper_modulus(PaperFamily::power_log, 1.5), DomainError);
    EXPECT_THROW((void)make_paper_modulus(PaperFamily::inverse_log, 0.0), DomainError);
}

TEST(Axioms, BuiltinsHoldOn256PointGrid) {
    const auto grid = uniform_grid(256, 2.0 * std::numbers::pi);
    for (const auto& w : builtins()) {
        const auto r = check_modulus_axioms(w, grid, 1e-10);
        EXPECT_TRUE(r.holds) << w.name() << " violation " << r.max_violation;
        EXPECT_LE(r.max_violation, 1e-10) << w.name();
    }
}

TEST(Axioms, HolderOn64PointGrid) {
    const auto r = check_modulus_axioms(make_holder(0.5), uniform_grid(64, 2.0 * std::numbers::pi), 1e-12);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.max_violation, 1e-12);
}

TEST(Axioms, SquareIsRejected) {
    const auto sq = make_custom("square", [](double t) { return t * t; }, false);
    const auto r = check_modulus_axioms(sq, uniform_grid(64, 2.0), 1e-12);
    EXPECT_FALSE(r.holds);
    EXPECT_GT(r.max_violation, 1.0);
}

TEST(Axioms, PowerLogAcrossBreakpointMatchesPairOracle) {
    const auto w = make_paper_modulus(PaperFamily::power_log, 1.0);
    const auto grid = uniform_grid(200, 1.5);
    double worst = 0.0;
    for (const double a : grid)
        for (const double b : grid) {
            worst = std::max(worst, w(a + b) - w(a) - w(b));
            if (a <= b) worst = std::max(worst, w(a) - w(b));
            worst = std::max(worst, 0.5 * (w(a) + w(b)) - w(0.5 * (a + b)));
        }
    const auto r = check_modulus_axioms(w, grid, 1e-12);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(worst, 1e-12);
}

TEST(Axioms, ConcaveSlopeInequality) {
    const auto grid = uniform_grid(128, 2.0 * std::numbers::pi);
    for (const auto& w : builtins())
        for (const double a : grid)
            for (const double b : grid) {
                if (0.0 < a && a < b) {
                    EXPECT_LE(w(b) - w(a), w(a) * (b - a) / a + 1e-12) << w.name();
                }
            }
}

TEST(InfiniteSlope, Classification) {
    EXPECT_TRUE(has_infinite_slope(make_holder(0.5)));
    EXPECT_FALSE(has_infinite_slope(make_linear()));
    EXPECT_TRUE(has_infinite_slope(make_paper_modulus(PaperFamily::inverse_log, 1.0)));
    EXPECT_TRUE(has_infinite_slope(make_paper_modulus(PaperFamily::power_log, 1.0)));
    EXPECT_TRUE(has_infinite_slope(make_paper_modulus(PaperFamily::log_power, 0.5)));
}

TEST(InfiniteSlope, InverseLogRatiosIncrease) {
    const auto w = make_paper_modulus(PaperFamily::inverse_log, 1.0);
    double prev = 0.0;
    for (int k = 21; k <= 40; ++k) {
        const double r = w(std::ldexp(1.0, -k)) * std::ldexp(1.0, k);
        EXPECT_GT(r, prev);
        prev = r;
    }
}

TEST(InfiniteSlope, RequiresEnoughLevels) {
    EXPECT_THROW((void)has_infinite_slope(make_holder(0.5), 7), DomainError);
}

TEST(Parse, Descriptors) {
    EXPECT_EQ(parse_modulus("holder:0.5").family(), ModulusFamily::holder);
    EXPECT_DOUBLE_EQ(parse_modulus("holder:0.5").alpha(), 0.5);
    EXPECT_EQ(parse_modulus("logpow:0.3").family(), ModulusFamily::log_power);
    EXPECT_EQ(parse_modulus("powlog:1.0").family(), ModulusFamily::power_log);
    EXPECT_EQ(parse_modulus("invlog:1.0").family(), ModulusFamily::inverse_log);
    EXPECT_EQ(parse_modulus("linear").family(), ModulusFamily::linear);
}

TEST(Parse, RoundTrip) {
    for (const auto& w : builtins()) {
        const auto again = parse_modulus(descriptor(w));
        EXPECT_EQ(descriptor(again), descriptor(w));
        EXPECT_EQ(again(0.37), w(0.37));
    }
}

TEST(Parse, Rejects) {
    EXPECT_THROW((void)parse_modulus("cubic:2"), ParseError);
    EXPECT_THROW((void)parse_modulus("holder"), ParseError);
    EXPECT_THROW((void)parse_modulus("holder:abc"), ParseError);
    EXPECT_THROW((void)parse_modulus("holder:0.5x"), ParseError);
    EXPECT_THROW((void)parse_modulus(""), ParseError);
    EXPECT_THROW((void)parse_modulus("holder:2"), ParseError);
}

TEST(Modulus, EvaluatesAtAbsoluteValue) {
    const auto w = make_holder(0.5);
    EXPECT_EQ(w(-4.0), 2.0);
    EXPECT_EQ(w(-0.0), 0.0);
}
