#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "vpsum/errors.hpp"
#include "vpsum/extremal.hpp"

using namespace vpsum;
using vpsum::testing::for_all;
using vpsum::testing::Gen;

constexpr double kPi = std::numbers::pi;

namespace {

struct Config {
    PoissonParams params;
    VPParams vp;
    ChangeOfVariable cov;
    OscillationGrid grid;
    Config(double q, double beta, int n, int p)
        : params(q, beta), vp(n, p), cov(params, vp), grid(make_grid(cov)) {}
};

// Direct O(N^2) pair enumeration.
double brute_force_excess(const SampledPeriodicFunction& f, const Modulus& m) {
    const std::size_t n = f.size();
    double worst = -1e300;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t d = std::min(j - i, n - (j - i));
            worst = std::max(worst, std::abs(f[i] - f[j]) - m(f.step() * static_cast<double>(d)));
        }
    return worst;
}

}  // namespace

TEST(AlphaQ, Values) {
    EXPECT_EQ(alpha_q(0.5), 5);
    EXPECT_EQ(alpha_q(0.75), 11);
    EXPECT_EQ(alpha_q(0.1), 2);
    EXPECT_EQ(alpha_q(0.3), 3);
    EXPECT_EQ(min_admissible_gap(0.5), 12);
    EXPECT_EQ(min_admissible_gap(0.3), 9);
}

TEST(ChangeOfVariable, RejectsInadmissibleWithRequiredGap) {
    try {
        (void)ChangeOfVariable(PoissonParams(0.5, 0.0), VPParams(12, 1));
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.required_gap(), 12);
    }
    EXPECT_NO_THROW((void)ChangeOfVariable(PoissonParams(0.5, 0.0), VPParams(13, 1)));
}

TEST(ChangeOfVariable, DerivativeBounds) {
    const Config s(0.5, 0.0, 60, 2);
    for (int i = 0; i < 512; ++i) {
        const double t = 2.0 * kPi * i / 511.0;
        const double d = s.cov.derivative(t);
        EXPECT_GT(d, 1.0 / 3.0) << t;
        EXPECT_LT(d, 1.0) << t;
    }
}

TEST(ChangeOfVariable, DerivativeBoundsAcrossAdmissibleConfigs) {
    for_all(61, 200, [](Gen& g, int) {
        const double q = g.uniform(0.05, 0.9);
        const int p = g.integer(1, 6);
        const int n = p + min_admissible_gap(q) + g.integer(0, 50);
        const Config s(q, g.uniform(0.0, 4.0), n, p);
        for (int i = 0; i < 64; ++i) {
            const double d = s.cov.derivative(g.angle());
            EXPECT_GT(d, 1.0 / 3.0);
            EXPECT_LT(d, 1.0);
        }
    });
}

TEST(ChangeOfVariable, DerivativeMatchesFiniteDifference) {
    const Config s(0.7, 1.3, 50, 3);
    for (int i = 0; i < 50; ++i) {
        const double t = 0.1 + 0.12 * i, h = 1e-6;
        EXPECT_NEAR(s.cov.derivative(t), (s.cov.forward(t + h) - s.cov.forward(t - h)) / (2 * h), 1e-8);
    }
}

TEST(ChangeOfVariable, InverseRoundTrip) {
    for_all(62, 20, [](Gen& g, int) {
        const Config s(g.uniform(0.1, 0.8), g.uniform(0.0, 4.0), 40 + g.integer(0, 100), g.integer(1, 4));
        for (int i = 0; i < 64; ++i) {
            const double t = g.angle();
            EXPECT_NEAR(s.cov.inverse(s.cov.forward(t)), t, 1e-11);
        }
    });
}

TEST(ChangeOfVariable, EndpointFacts) {
    for_all(63, 100, [](Gen& g, int) {
        const double beta = g.uniform(0.0, 4.0);
        const Config s(g.uniform(0.05, 0.9), beta, 200, g.integer(1, 5));
        const double m = s.cov.frequency();
        EXPECT_NEAR(s.cov.forward(0.0), beta * kPi / (2.0 * m), 1e-15);
        EXPECT_LT(s.cov.forward(2.0 * kPi), 4.0 * kPi);
        const auto& tau = s.grid.tau;
        EXPECT_GT(tau[static_cast<std::size_t>(s.grid.s)], s.cov.forward(0.0));
        EXPECT_GT(s.cov.inverse(tau[static_cast<std::size_t>(s.grid.s)]), 0.0);
        EXPECT_LE(s.cov.inverse(tau[static_cast<std::size_t>(s.grid.k0)]), 2.0 * kPi + 1e-12);
    });
}

TEST(Grid, SpacingAndRoots) {
    const Config s(0.5, 0.0, 60, 2);
    const double m = s.cov.frequency();
    EXPECT_EQ(m, 60 - 2 + 5);
    for (int k = 2; k <= s.grid.k0; ++k) {
        const auto i = static_cast<std::size_t>(k);
        EXPECT_NEAR(s.grid.x[i + 1] - s.grid.x[i], kPi / m, 1e-14);
        EXPECT_NEAR(std::cos(m * s.grid.tau[i]), 0.0, 1e-12);
        EXPECT_NEAR(s.grid.tau[i] - s.grid.x[i], kPi / (2.0 * m), 1e-14);
    }
    EXPECT_EQ(s.grid.x.size(), static_cast<std::size_t>(s.grid.k0 + 2));
}

TEST(Grid, K0MatchesLinearScan) {
    auto scan = [](const Config& s) {
        const double end = s.cov.forward(2.0 * kPi);
        int k = 0;
        while ((k + 1.5) * kPi / s.cov.frequency() <= end) ++k;
        return k;
    };
    const Config fixed(0.5, 0.0, 60, 2);
    EXPECT_EQ(fixed.grid.k0, scan(fixed));
    for_all(64, 300, [&](Gen& g, int) {
        const double q = g.uniform(0.05, 0.9);
        const int p = g.integer(1, 8);
        const int n = p + min_admissible_gap(q) + g.integer(0, 200);
        const Config s(q, g.uniform(0.0, 4.0), n, p);
        EXPECT_EQ(s.grid.k0, scan(s));
        EXPECT_EQ(s.grid.s, s.grid.k0 % 2 == 1 ? 2 : 3);
    });
}

TEST(Grid, TieAtBetaOneIsInclusive) {
    const Config s(0.5, 1.0, 40, 1);
    EXPECT_EQ(s.grid.k0, 2 * 40);
    EXPECT_NEAR(s.grid.tau[static_cast<std::size_t>(s.grid.k0)] * s.cov.frequency() / kPi,
                s.cov.forward(2.0 * kPi) * s.cov.frequency() / kPi, 1e-9);
}

TEST(PhiStar, VanishesAtZerosAndPeaksAtPeakValue) {
    const auto w = make_holder(0.5);
    const Config s(0.5, 0.0, 60, 2);
    const ExtremalFunction f(w, s.cov, s.grid);
    for (const double z : f.zeros()) EXPECT_NEAR(f(z), 0.0, 1e-6);
    for (const double pk : f.peaks()) EXPECT_NEAR(std::abs(f(pk)), f.peak_value(), 1e-10);
    EXPECT_DOUBLE_EQ(f.peak_value(), 0.5 * std::sqrt(kPi / s.cov.frequency()));
    EXPECT_EQ(f(0.5 * f.zeros().front()), 0.0);
}

TEST(PhiStar, SignAlternates) {
    const auto w = make_paper_modulus(PaperFamily::inverse_log, 1.0);
    const Config s(0.3, 2.5, 80, 3);
    const ExtremalFunction f(w, s.cov, s.grid);
    const auto& z = f.zeros();
    int prev = 0;
    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
        const int i = f.first_index() + static_cast<int>(k);
        const double v = f(f.peaks()[k]);
        const int sign = v > 0 ? 1 : -1;
        EXPECT_EQ(sign, ExtremalFunction::interval_sign(i));
        EXPECT_NE(sign, prev);
        EXPECT_EQ(f(0.5 * (z[k] + f.peaks()[k])) > 0 ? 1 : -1, sign);
        prev = sign;
    }
}

TEST(PhiStar, SamplesStayBelowPeak) {
    const auto w = make_holder(0.5);
    const Config s(0.5, 0.0, 64, 1);
    const auto phi = build_phi_star(w, s.cov, s.grid, 4096);
    const ExtremalFunction f(w, s.cov, s.grid);
    double mx = 0.0;
    for (const double v : phi.samples()) mx = std::max(mx, std::abs(v));
    EXPECT_LE(mx, f.peak_value() + 1e-15);
    EXPECT_GT(mx, 0.99 * f.peak_value());
}

TEST(PhiStar, HOmegaByPairEnumeration) {
    const auto w = make_holder(0.5);
    const Config s(0.5, 0.0, 40, 1);
    const auto phi = build_phi_star(w, s.cov, s.grid, 2048);
    const auto rep = check_h_omega(phi, w);
    EXPECT_NEAR(rep.max_excess, brute_force_excess(phi, w), 1e-15);
    EXPECT_LE(rep.max_excess, 1e-3 * w(2.0 * kPi / 2048.0));
}

TEST(PhiStar, HOmegaAcrossFamilies) {
    const std::vector<Modulus> ms{make_holder(0.3), make_paper_modulus(PaperFamily::log_power, 0.5),
                                  make_paper_modulus(PaperFamily::power_log, 1.0),
                                  make_paper_modulus(PaperFamily::inverse_log, 0.5), make_linear()};
    for (const auto& w : ms) {
        const Config s(0.6, 1.7, 50, 2);
        const auto phi = build_phi_star(w, s.cov, s.grid, 2048);
        EXPECT_LE(check_h_omega(phi, w).max_excess, 1e-8 + w(2.0 * kPi / 2048.0)) << w.name();
    }
}

TEST(PhiStar, Preconditions) {
    const Config s(0.5, 0.0, 64, 1);
    const auto bad = make_custom("bumpy", [](double t) { return std::min(t * t, 1.0); }, false);
    EXPECT_THROW((void)build_phi_star(bad, s.cov, s.grid, 4096), UnsupportedError);
    EXPECT_THROW((void)build_phi_star(make_holder(0.5), s.cov, s.grid, 1024), ConfigError);
    EXPECT_THROW((void)build_phi_star(make_holder(0.5), s.cov, s.grid, 3000), ConfigError);
}

TEST(HOmegaCheck, ZeroAndViolation) {
    const auto w = make_holder(0.5);
    const SampledPeriodicFunction zero(std::vector<double>(256, 0.0));
    EXPECT_LE(check_h_omega(zero, w).max_excess, 0.0);
    std::vector<double> spike(256, 0.0);
    spike[10] = 1.0;
    const auto r = check_h_omega(SampledPeriodicFunction(spike), w);
    EXPECT_GT(r.max_excess, 0.0);
    EXPECT_EQ(r.worst_shift, 1u);
}

TEST(HOmegaCheck, HalfModulusBumpIsAdmissible) {
    const auto w = make_holder(0.5);
    const auto f = SampledPeriodicFunction::sample(
        [&](double t) { return t < 0.5 ? 0.5 * w(2.0 * std::min(t, 0.5 - t)) : 0.0; }, 512);
    EXPECT_LE(check_h_omega(f, w).max_excess, 1e-15);
}
