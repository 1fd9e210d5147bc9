#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vpsum/constants.hpp"
#include "vpsum/errors.hpp"
#include "vpsum/extremal.hpp"
#include "vpsum/harness.hpp"
#include "vpsum/report_io.hpp"
#include "vpsum/simd.hpp"
#include "vpsum/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string modulus = "holder:0.5";
    double q = 0.5;
    double beta = 0.0;
    int n = 0;
    int p = 1;
};

void add_config_options(CLI::App* cmd, Config& c, bool with_modulus = true) {
    if (with_modulus) cmd->add_option("--modulus", c.modulus, "holder:A | logpow:A | powlog:A | invlog:A | linear")
                          ->capture_default_str();
    cmd->add_option("--q", c.q, "Poisson parameter, 0 < q <= 0.99")->check(CLI::Range(1e-300, 0.99))
        ->capture_default_str();
    cmd->add_option("--beta", c.beta, "phase parameter")->capture_default_str();
    cmd->add_option("--n", c.n, "order n")->required();
    cmd->add_option("--p", c.p, "averaging width, 1 <= p < n")->capture_default_str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw vpsum::ConfigError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace vpsum;
    CLI::App app{"de la Vallee Poussin sums on Poisson integrals: constants, witnesses, sweeps"};
    app.require_subcommand(1);
    std::string isa;
    app.add_option("--isa", isa, "force a kernel variant (scalar, avx2)");

    // constants
    auto* constants = app.add_subcommand("constants", "evaluate K_{p,q}, K(k) or e_n");
    constants->require_subcommand(1);
    int kp = 1;
    double kq = 0.5;
    std::string method = "closed";
    auto* kpq = constants->add_subcommand("kpq", "K_{p,q}");
    kpq->add_option("--p", kp)->required()->check(CLI::PositiveNumber);
    kpq->add_option("--q", kq)->required()->check(CLI::Range(1e-300, 0.99));
    kpq->add_option("--method", method)->check(CLI::IsMember({"closed", "quadrature"}))->capture_default_str();
    double ek = 0.0;
    auto* ell = constants->add_subcommand("elliptic", "complete elliptic integral K(k)");
    ell->add_option("--q,--k", ek, "modulus of the integral, 0 <= q < 1")->required();
    std::string en_mod = "holder:0.5";
    int en_n = 1;
    auto* en = constants->add_subcommand("en", "e_n(omega)");
    en->add_option("--modulus", en_mod)->capture_default_str();
    en->add_option("--n", en_n)->required();

    // predict
    Config pc;
    int theorem = 1;
    auto* pred = app.add_subcommand("predict", "principal term and remainder scale of a theorem");
    add_config_options(pred, pc);
    pred->add_option("--theorem", theorem)->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
    std::string pformat = "json";
    pred->add_option("--format", pformat)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    // extremal
    Config xc;
    std::size_t xgrid = 0;
    std::string emit;
    auto* ext = app.add_subcommand("extremal", "build the witness function phi*");
    add_config_options(ext, xc);
    ext->add_option("--grid", xgrid, "sampling grid (power of two); default max(4096, 32(n-p+1))");
    ext->add_option("--emit-samples", emit, "write t,phi*(t) pairs as CSV");

    // deviation
    Config dc;
    bool json = false;
    int perturb = 0;
    int dtheorem = 1;
    auto* dev = app.add_subcommand("deviation", "measure sup |f* - V_{n,p}(f*)| for the witness");
    add_config_options(dev, dc);
    dev->add_flag("--json", json, "JSON instead of CSV");
    dev->add_option("--perturb", perturb, "coordinate-ascent sweeps over the samples (0 = off)")
        ->check(CLI::NonNegativeNumber);
    dev->add_option("--theorem", dtheorem, "prediction to compare against")->check(CLI::IsMember({1, 2, 3}));

    // verify
    auto* verify = app.add_subcommand("verify", "identity suite and theorem sweeps");
    verify->require_subcommand(1);
    std::string mode = "full";
    bool ijson = false;
    auto* ident = verify->add_subcommand("identities", "closed forms against their other sides");
    ident->add_option("--mode", mode)->check(CLI::IsMember({"full", "single", "limiting"}))
        ->capture_default_str();
    ident->add_flag("--json", ijson);
    int tid = 1;
    std::string sweep_path, format = "text", plot;
    unsigned threads = 0;
    auto* vth = verify->add_subcommand("theorem", "run a sweep and judge the ratio trends");
    vth->add_option("--id", tid)->required()->check(CLI::IsMember({1, 2, 3}));
    vth->add_option("--sweep", sweep_path)->required()->check(CLI::ExistingFile);
    vth->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}))->capture_default_str();
    vth->add_option("--plot", plot, "write gnuplot (n-p+1, ratio) blocks");
    vth->add_option("--threads", threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!isa.empty()) {
            if (isa == "scalar") simd::set_active_isa(simd::Isa::scalar);
            else if (isa == "avx2") simd::set_active_isa(simd::Isa::avx2);
            else throw ConfigError("unknown --isa '" + isa + "'");
        }

        if (kpq->parsed()) {
            const double v = method == "closed" ? k_pq_closed(kp, kq) : k_pq_quadrature(kp, kq);
            std::cout << format_double(v) << "\n";
        } else if (ell->parsed()) {
            std::cout << format_double(elliptic_k(ek)) << "\n";
        } else if (en->parsed()) {
            std::cout << format_double(e_n(parse_modulus(en_mod), en_n)) << "\n";
        } else if (pred->parsed()) {
            const auto m = parse_modulus(pc.modulus);
            const auto t = predict(theorem_from_int(theorem), m, PoissonParams(pc.q, pc.beta), VPParams(pc.n, pc.p));
            std::cout << (pformat == "json" ? to_json(t) + "\n" : to_csv(t));
        } else if (ext->parsed()) {
            const auto m = parse_modulus(xc.modulus);
            const PoissonParams params(xc.q, xc.beta);
            const VPParams vp(xc.n, xc.p);
            const ChangeOfVariable cov(params, vp);
            const auto grid = make_grid(cov);
            const std::size_t n = xgrid != 0 ? xgrid
                                             : next_power_of_two(std::max<std::size_t>(
                                                   4096, 32 * static_cast<std::size_t>(vp.gap())));
            const auto phi = build_phi_star(m, cov, grid, n);
            const ExtremalFunction f(m, cov, grid);
            std::cout << "alpha_q " << cov.alpha_q() << "\n"
                      << "frequency " << format_double(cov.frequency()) << "\n"
                      << "k0 " << grid.k0 << "\n"
                      << "s " << grid.s << "\n"
                      << "support " << format_double(f.zeros().front()) << " "
                      << format_double(f.zeros().back()) << "\n"
                      << "peak_value " << format_double(f.peak_value()) << "\n"
                      << "grid " << n << "\n";
            if (!emit.empty()) {
                std::string out = "t,phi\n";
                for (std::size_t j = 0; j < phi.size(); ++j)
                    out += format_double(phi.node(j)) + "," + format_double(phi[j]) + "\n";
                write_file(emit, out);
            }
        } else if (dev->parsed()) {
            RunOptions o;
            o.theorem = theorem_from_int(dtheorem);
            o.perturb_sweeps = perturb;
            const auto r = estimate_sup_deviation(parse_modulus(dc.modulus), PoissonParams(dc.q, dc.beta),
                                                  VPParams(dc.n, dc.p), o);
            if (json)
                std::cout << to_json(r) << "\n";
            else
                std::cout << csv_header() << "\n" << csv_row(r) << "\n";
        } else if (ident->parsed()) {
            const auto m = mode == "full" ? IdentityMode::full
                           : mode == "single" ? IdentityMode::single_point
                                              : IdentityMode::limiting;
            const auto r = verify_identities(m);
            std::cout << (ijson ? to_json(r) + "\n" : to_text(r));
            return r.ok() ? kExitOk : kExitFailed;
        } else if (vth->parsed()) {
            RunOptions o;
            o.threads = threads;
            const auto v = verify_theorem(theorem_from_int(tid), load_sweep(sweep_path), o);
            if (format == "json")
                std::cout << to_json(v) << "\n";
            else if (format == "csv")
                std::cout << to_csv(v.reports);
            else
                std::cout << to_text(v);
            for (const auto& w : v.warnings)
                if (format != "text") std::cerr << "warning: " << w << "\n";
            if (!plot.empty()) write_file(plot, gnuplot_series(v));
            return v.ok() ? kExitOk : kExitFailed;
        }
        return kExitOk;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
