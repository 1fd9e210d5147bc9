#include "vpsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <tuple>

#include "vpsum/errors.hpp"
#include "vpsum/extremal.hpp"
#include "vpsum/simd.hpp"
#include "vpsum/sums.hpp"

namespace vpsum {

TheoremId theorem_from_int(int id) {
    switch (id) {
        case 1: return TheoremId::one;
        case 2: return TheoremId::two;
        case 3: return TheoremId::three;
        default: throw ConfigError("theorem id must be 1, 2 or 3, got " + std::to_string(id));
    }
}

TheoremPrediction predict(TheoremId theorem, const Modulus& m, const PoissonParams& params,
                          const VPParams& vp) {
    switch (theorem) {
        case TheoremId::one: return theorem1_prediction(m, params, vp);
        case TheoremId::two:
            if (m.family() != ModulusFamily::holder)
                throw ConfigError("theorem 2 applies to the Hoelder family only, got '" +
                                  descriptor(m) + "'");
            return theorem2_prediction(m.alpha(), params, vp);
        case TheoremId::three: return theorem3_bracket(m, params, vp);
    }
    throw ConfigError("unknown theorem id");
}

namespace {

std::size_t witness_grid(const PoissonParams& params, const VPParams& vp, const RunOptions& o) {
    const auto gap = static_cast<std::size_t>(vp.gap());
    const auto degree = static_cast<std::size_t>(deviation_spectrum_degree(params, vp, o.tail_tol));
    return next_power_of_two(std::max({o.min_grid, 32 * gap, 2 * degree + 2,
                                       SampledPeriodicFunction::kMinSize}));
}

TrigSeries spectrum_of(const SampledPeriodicFunction& phi, const PoissonParams& params,
                       const VPParams& vp, double tail_tol) {
    const int degree = deviation_spectrum_degree(params, vp, tail_tol);
    if (2 * static_cast<std::size_t>(degree) >= phi.size())
        throw ConfigError("grid of " + std::to_string(phi.size()) +
                          " samples cannot resolve harmonic " + std::to_string(degree));
    return deviation_spectrum(fourier_coeffs(phi, degree), params, vp, tail_tol);
}

}  // namespace

DeviationReport evaluate_witness(const SampledPeriodicFunction& phi, const Modulus& m,
                                 const PoissonParams& params, const VPParams& vp,
                                 const RunOptions& options) {
    const auto series = spectrum_of(phi, params, vp, options.tail_tol);
    const auto initial = std::max(options.min_grid, phi.size());
    const auto sup = sup_norm(series, initial, options.sup_rel_tol);
    const auto pred = predict(options.theorem, m, params, vp);

    DeviationReport r;
    r.omega = descriptor(m);
    r.q = params.q();
    r.beta = params.beta();
    r.n = vp.n();
    r.p = vp.p();
    r.grid = phi.size();
    r.sup_grid = sup.grid;
    r.argmax = sup.argmax;
    r.empirical_sup = sup.value * series.scale;
    r.empirical_coeff = sup.value * static_cast<double>(vp.p());
    r.principal = pred.principal();
    r.principal_coeff = pred.principal_coeff;
    r.remainder_scale = pred.remainder_scale();
    r.remainder_coeff = pred.remainder_coeff;
    r.ratio = r.empirical_coeff / r.principal_coeff;
    r.bracket_low = pred.bracket_low();
    r.bracket_high = pred.bracket_high();
    r.bracket_low_coeff = pred.bracket_low_coeff;
    r.bracket_high_coeff = pred.bracket_high_coeff;
    return r;
}

SampledPeriodicFunction perturb_witness(const SampledPeriodicFunction& phi, const Modulus& m,
                                        const PoissonParams& params, const VPParams& vp, double x,
                                        int sweeps, double tail_tol) {
    const std::size_t n = phi.size();
    const auto series = spectrum_of(phi, params, vp, tail_tol);
    const double sigma = evaluate_normalized(series, x) >= 0.0 ? 1.0 : -1.0;

    // rho(phi; x) is linear in the samples with weights proportional to
    // sum_j w_j q^{j-m} cos(j (t_i - x) + beta pi/2).
    TrigSeries g = series;
    const double q = params.q();
    double damp = 1.0;
    for (std::size_t i = 0; i < g.cos_amp.size(); ++i) {
        const int j = series.first + static_cast<int>(i);
        const double w = deviation_weight(vp, j) * damp;
        const double arg = params.phase() - static_cast<double>(j) * x;
        g.cos_amp[i] = w * std::cos(arg);
        g.sin_amp[i] = -w * std::sin(arg);
        damp *= q;
    }
    const auto grad = evaluate_normalized_on_grid(g, n);

    std::vector<double> bound(n);
    for (std::size_t d = 0; d < n; ++d)
        bound[d] = m(phi.step() * static_cast<double>(std::min(d, n - d)));
    bound[0] = std::numeric_limits<double>::infinity();

    std::vector<double> doubled(2 * n);
    const auto s = phi.samples();
    std::copy(s.begin(), s.end(), doubled.begin());
    std::copy(s.begin(), s.end(), doubled.begin() + static_cast<std::ptrdiff_t>(n));
    const std::span<const double> w(bound);

    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double gain = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dir = sigma * grad[i];
            if (dir == 0.0) continue;
            const std::span<const double> window(doubled.data() + i, n);
            const double target = dir > 0.0 ? simd::min_sum(window, w) : simd::max_diff(window, w);
            const double delta = dir * (target - doubled[i]);
            if (!(delta > 0.0) || !std::isfinite(target)) continue;
            gain += delta;
            doubled[i] = target;
            doubled[i + n] = target;
        }
        if (!(gain > 0.0)) break;
    }
    doubled.resize(n);
    return SampledPeriodicFunction(std::move(doubled));
}

DeviationReport estimate_sup_deviation(const Modulus& m, const PoissonParams& params,
                                       const VPParams& vp, const RunOptions& options) {
    const ChangeOfVariable cov(params, vp);
    const auto grid = make_grid(cov);
    const auto phi = build_phi_star(m, cov, grid, witness_grid(params, vp, options));
    auto report = evaluate_witness(phi, m, params, vp, options);
    if (options.perturb_sweeps > 0) {
        const auto better =
            perturb_witness(phi, m, params, vp, report.argmax, options.perturb_sweeps, options.tail_tol);
        report = evaluate_witness(better, m, params, vp, options);
        report.perturbed = true;
    }
    return report;
}

bool trend_toward_one(std::span<const double> ratios, double tol) {
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (std::abs(ratios[i] - 1.0) > std::abs(ratios[i - 1] - 1.0) + tol) return false;
    return true;
}

namespace {

struct Job {
    std::size_t line = 0;
    Modulus modulus;
    PoissonParams params;
    VPParams vp;
};

auto report_key(const DeviationReport& r) { return std::tie(r.omega, r.q, r.beta, r.p, r.n); }

}  // namespace

TheoremVerification verify_theorem(TheoremId theorem, const std::vector<SweepLine>& sweep,
                                   const RunOptions& options) {
    TheoremVerification out;
    out.theorem = theorem;

    std::vector<Job> jobs;
    for (std::size_t li = 0; li < sweep.size(); ++li) {
        const auto& line = sweep[li];
        const Modulus mod = parse_modulus(line.modulus);
        if (theorem == TheoremId::two && mod.family() != ModulusFamily::holder) {
            out.warnings.push_back("line " + std::to_string(li + 1) + ": theorem 2 needs a holder modulus, '" +
                                   line.modulus + "' skipped");
            continue;
        }
        if (!mod.convex_upwards()) {
            out.warnings.push_back("line " + std::to_string(li + 1) + ": modulus '" + line.modulus +
                                   "' is not convex upwards, skipped");
            continue;
        }
        for (const int gap : line.gaps) {
            const int n = gap + line.p - 1;
            try {
                PoissonParams params(line.q, line.beta);
                VPParams vp(n, line.p);
                if (vp.p() >= vp.n() || !is_admissible(params, vp)) {
                    out.warnings.push_back("line " + std::to_string(li + 1) + ": n-p+1 = " +
                                           std::to_string(gap) + " inadmissible (need n-p >= " +
                                           std::to_string(min_admissible_gap(line.q)) + "), skipped");
                    continue;
                }
                jobs.push_back(Job{li, mod, params, vp});
            } catch (const std::exception& e) {
                out.warnings.push_back("line " + std::to_string(li + 1) + ": " + e.what() + ", skipped");
            }
        }
    }

    RunOptions run = options;
    run.theorem = theorem;
    std::vector<std::optional<DeviationReport>> results(jobs.size());
    std::vector<std::string> job_errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            try {
                results[k] = estimate_sup_deviation(jobs[k].modulus, jobs[k].params, jobs[k].vp, run);
            } catch (const std::exception& e) {
                job_errors[k] = e.what();
            }
        }
    };
    unsigned nthreads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::vector<std::pair<std::size_t, DeviationReport>> done;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (results[k])
            done.emplace_back(jobs[k].line, std::move(*results[k]));
        else
            out.warnings.push_back("line " + std::to_string(jobs[k].line + 1) + ": n = " +
                                   std::to_string(jobs[k].vp.n()) + " failed: " + job_errors[k]);
    }
    std::stable_sort(done.begin(), done.end(), [](const auto& a, const auto& b) {
        return report_key(a.second) < report_key(b.second);
    });

    out.lines.resize(sweep.size());
    for (std::size_t li = 0; li < sweep.size(); ++li) out.lines[li].line = sweep[li];
    for (std::size_t k = 0; k < done.size(); ++k) {
        out.reports.push_back(done[k].second);
        out.lines[done[k].first].reports.push_back(k);
    }

    for (auto& summary : out.lines) {
        auto& idx = summary.reports;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return out.reports[a].gap() < out.reports[b].gap();
        });
        if (idx.empty()) continue;
        std::vector<double> ratios;
        for (const auto k : idx) {
            const auto& r = out.reports[k];
            ratios.push_back(r.ratio);
            summary.principal_dominant = summary.principal_dominant && r.principal_dominant();
            const Modulus mod = parse_modulus(r.omega);
            if (r.gap() >= kLowerBoundMinGap && r.q <= kLowerBoundMaxQ && has_infinite_slope(mod) &&
                r.ratio < kLowerBoundFactor)
                summary.lower_bound_ok = false;
            if (theorem == TheoremId::three && r.bracket_low_coeff && r.bracket_high_coeff) {
                const double slack = r.remainder_coeff;
                if (r.empirical_coeff < *r.bracket_low_coeff - slack ||
                    r.empirical_coeff > *r.bracket_high_coeff + slack)
                    summary.bracket_ok = false;
            }
        }
        summary.trend_ok = trend_toward_one(ratios);
        summary.first_remainder_ratio = out.reports[idx.front()].remainder_to_principal();
        summary.last_remainder_ratio = out.reports[idx.back()].remainder_to_principal();
        out.trend_ok = out.trend_ok && summary.trend_ok;
        out.lower_bound_ok = out.lower_bound_ok && summary.lower_bound_ok;
        out.bracket_ok = out.bracket_ok && summary.bracket_ok;
    }
    if (out.reports.empty()) out.warnings.push_back("no configuration ran");
    return out;
}

bool IdentityReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

namespace {

constexpr double kPi = std::numbers::pi;

double kernel_series(double q, double beta, int from, double t) {
    const double c = beta * kPi / 2.0;
    double acc = 0.0;
    double qk = std::pow(q, from);
    for (int k = from; k < from + 2000 && qk > 1e-300; ++k) {
        acc += qk * std::cos(k * t + c);
        qk *= q;
    }
    return acc;
}

std::vector<double> q_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 9; ++i) g.push_back(0.1 * i);
    return g;
}

std::vector<Modulus> builtin_moduli() {
    return {make_holder(0.5),
            make_holder(0.25),
            make_paper_modulus(PaperFamily::log_power, 0.5),
            make_paper_modulus(PaperFamily::power_log, 0.5),
            make_paper_modulus(PaperFamily::inverse_log, 0.5),
            make_linear()};
}

void kernel_checks(IdentityReport& rep) {
    std::mt19937_64 rng(20100329);
    std::uniform_real_distribution<double> uq(0.01, 0.9), ub(0.0, 4.0), ut(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> um(1, 200);
    double kernel_err = 0.0;
    double tail_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double q = uq(rng), beta = ub(rng), t = ut(rng);
        const int m = um(rng);
        const PoissonParams params(q, beta);
        kernel_err = std::max(kernel_err, std::abs(poisson_kernel(params, t) - kernel_series(q, beta, 1, t)));
        tail_err = std::max(tail_err, std::abs(poisson_tail(params, m, t) - kernel_series(q, beta, m, t)));
    }
    rep.checks.push_back({"poisson kernel closed form vs series", kernel_err, 1e-11});
    rep.checks.push_back({"tail kernel closed form vs series", tail_err, 1e-11});

    std::uniform_real_distribution<double> uq2(0.01, 0.95);
    std::uniform_int_distribution<int> un(2, 200);
    double block_err = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double q = uq2(rng), beta = ub(rng), t = ut(rng);
        const int n = un(rng);
        const int p = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const PoissonParams params(q, beta);
        const VPParams vp(n, p);
        const double shift = theta_q(q, t) + params.phase();
        double direct = 0.0;
        for (int k = n - p + 1; k <= n; ++k) direct += std::pow(q, k) * std::cos(k * t + shift);
        block_err = std::max(block_err, std::abs(block_sum(params, vp, t) - direct));
    }
    rep.checks.push_back({"block sum closed form vs direct sum", block_err, 1e-12});
}

void constant_checks(IdentityReport& rep) {
    double quad_err = 0.0, collapse_err = 0.0, asym = 0.0, bracket = 0.0, low_vs_t1 = 0.0;
    const auto holder = make_holder(0.5);
    for (int p = 1; p <= 8; ++p) {
        for (const double q : q_grid()) {
            const double closed = k_pq_closed(p, q);
            const double integral = k_pq_quadrature(p, q);
            quad_err = std::max(quad_err, std::abs(integral - closed));
            if (p == 1) collapse_err = std::max(collapse_err, std::abs(integral - 4.0 * elliptic_k(q)));
            asym = std::max(asym, std::abs(closed * (1.0 - q * q) / (2.0 * kPi) - 1.0) / (2.0 * std::pow(q, p)));
            const double qp = std::pow(q, p);
            const double jl = (1.0 + qp) / (1.0 + q) * elliptic_k(qp);
            const double jh = elliptic_k(q);
            bracket = std::max(bracket, (jl - jh) / jh);
            const PoissonParams params(q, 0.0);
            const VPParams vp(64 + p - 1, p);
            const double t1 = theorem1_prediction(holder, params, vp).principal_coeff;
            const double t3 = *theorem3_bracket(holder, params, vp).bracket_low_coeff;
            low_vs_t1 = std::max(low_vs_t1, std::abs(t3 - t1) / t1);
        }
    }
    rep.checks.push_back({"K_{p,q} quadrature vs elliptic form", quad_err, 1e-9});
    rep.checks.push_back({"K_{1,q} vs 4 K(q)", collapse_err, 1e-10});
    rep.checks.push_back({"|K_{p,q}(1-q^2)/(2 pi) - 1| / (2 q^p)", asym, 1.0});
    rep.checks.push_back({"bracket inequality (J_low - J_high)/J_high", bracket, 1e-15});
    rep.checks.push_back({"bracket low end vs theorem 1 principal (relative)", low_vs_t1, 1e-12});
}

void en_checks(IdentityReport& rep) {
    double bound_violation = 0.0;
    for (const auto& m : builtin_moduli()) {
        for (const int n : {2, 8, 32, 128, 1024}) {
            const double e = e_n(m, n);
            const double upper = m(kPi / n);
            const double lower = 2.0 / kPi * upper;
            bound_violation = std::max({bound_violation, lower - e, e - upper});
        }
    }
    rep.checks.push_back({"e_n bounds (2/pi) w(pi/n) <= e_n <= w(pi/n)", std::max(bound_violation, 0.0), 1e-12});
    double linear_err = 0.0;
    const auto lin = make_linear();
    for (const int n : {2, 8, 32, 128, 1024})
        linear_err = std::max(linear_err, std::abs(e_n(lin, n) - 2.0 / n));
    rep.checks.push_back({"e_n(t) = 2/n", linear_err, 1e-12});
}

}  // namespace

IdentityReport verify_identities(IdentityMode mode) {
    IdentityReport rep;
    rep.mode = mode;
    switch (mode) {
        case IdentityMode::full:
            kernel_checks(rep);
            constant_checks(rep);
            en_checks(rep);
            break;
        case IdentityMode::single_point:
            rep.checks.push_back({"K_{1,0.5} quadrature vs 4 K(0.5)",
                                  std::abs(k_pq_quadrature(1, 0.5) - 4.0 * elliptic_k(0.5)), 1e-9});
            break;
        case IdentityMode::limiting: {
            double err = 0.0;
            for (int p = 1; p <= 8; ++p)
                err = std::max(err, std::abs(k_pq_quadrature(p, 1e-8) - 2.0 * kPi));
            rep.checks.push_back({"K_{p,1e-8} vs 2 pi", err, 1e-6});
            break;
        }
    }
    return rep;
}

}  // namespace vpsum
