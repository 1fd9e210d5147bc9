#include "vpsum/moduli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "vpsum/errors.hpp"

namespace vpsum {

Modulus::Modulus(std::string name, ModulusFamily family, double alpha,
                 std::function<double(double)> eval, bool convex_upwards,
                 std::optional<double> breakpoint)
    : name_(std::move(name)),
      family_(family),
      alpha_(alpha),
      eval_(std::move(eval)),
      convex_upwards_(convex_upwards),
      breakpoint_(breakpoint) {}

namespace {

std::string format_alpha(double alpha) {
    std::ostringstream os;
    os << alpha;
    return os.str();
}

}  // namespace

Modulus make_holder(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("holder modulus needs 0 < alpha < 1, got " + format_alpha(alpha));
    return Modulus("holder:" + format_alpha(alpha), ModulusFamily::holder, alpha,
                   [alpha](double t) { return std::pow(t, alpha); }, true);
}

Modulus make_paper_modulus(PaperFamily family, double alpha) {
    switch (family) {
        case PaperFamily::log_power:
            if (!(alpha > 0.0 && alpha < 1.0))
                throw DomainError("log_power modulus needs 0 < alpha < 1");
            return Modulus("logpow:" + format_alpha(alpha), ModulusFamily::log_power, alpha,
                           [alpha](double t) { return std::pow(std::log1p(t), alpha); }, true);

        case PaperFamily::power_log: {
            if (!(alpha > 0.0 && alpha <= 1.0))
                throw DomainError("power_log modulus needs 0 < alpha <= 1");
            const double knee = std::exp(-1.0 / alpha);
            const double plateau = 1.0 / (alpha * std::numbers::e);
            return Modulus(
                "powlog:" + format_alpha(alpha), ModulusFamily::power_log, alpha,
                [alpha, knee, plateau](double t) {
                    if (t <= 0.0) return 0.0;
                    if (t >= knee) return plateau;
                    return std::pow(t, alpha) * std::log(1.0 / t);
                },
                true, knee);
        }

        case PaperFamily::inverse_log: {
            if (!(alpha > 0.0 && alpha <= 1.0))
                throw DomainError("inverse_log modulus needs 0 < alpha <= 1");
            const double knee = std::exp(-(1.0 + alpha));
            const double plateau = std::pow(1.0 + alpha, -alpha);
            return Modulus(
                "invlog:" + format_alpha(alpha), ModulusFamily::inverse_log, alpha,
                [alpha, knee, plateau](double t) {
                    if (t <= 0.0) return 0.0;
                    if (t >= knee) return plateau;
                    return std::pow(std::log(1.0 / t), -alpha);
                },
                true, knee);
        }
    }
    throw DomainError("unknown modulus family");
}

Modulus make_linear() {
    return Modulus("linear", ModulusFamily::linear, 1.0, [](double t) { return t; }, true);
}

Modulus make_custom(std::string name, std::function<double(double)> eval, bool convex_upwards) {
    return Modulus(std::move(name), ModulusFamily::custom, 0.0, std::move(eval), convex_upwards);
}

Modulus parse_modulus(std::string_view descriptor) {
    const auto colon = descriptor.find(':');
    const std::string_view family = descriptor.substr(0, colon);
    if (family == "linear") {
        if (colon != std::string_view::npos)
            throw ParseError("modulus 'linear' takes no parameter");
        return make_linear();
    }
    if (colon == std::string_view::npos)
        throw ParseError("modulus descriptor must look like family:alpha, got '" +
                         std::string(descriptor) + "'");

    const std::string_view arg = descriptor.substr(colon + 1);
    double alpha = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), alpha);
    if (ec != std::errc{} || ptr != arg.data() + arg.size())
        throw ParseError("bad modulus parameter '" + std::string(arg) + "'");

    try {
        if (family == "holder") return make_holder(alpha);
        if (family == "logpow") return make_paper_modulus(PaperFamily::log_power, alpha);
        if (family == "powlog") return make_paper_modulus(PaperFamily::power_log, alpha);
        if (family == "invlog") return make_paper_modulus(PaperFamily::inverse_log, alpha);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown modulus family '" + std::string(family) +
                     "' (expected holder, logpow, powlog, invlog, linear)");
}

std::string descriptor(const Modulus& m) { return m.name(); }

AxiomReport check_modulus_axioms(const Modulus& m, std::span<const double> grid, double tol) {
    std::vector<double> t(grid.begin(), grid.end());
    std::sort(t.begin(), t.end());
    std::vector<double> w(t.size());
    std::transform(t.begin(), t.end(), w.begin(), [&](double x) { return m(x); });

    double worst = std::abs(m(0.0));
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i; j < t.size(); ++j) {
            // t[i] <= t[j]
            worst = std::max(worst, w[i] - w[j]);
            worst = std::max(worst, m(t[i] + t[j]) - (w[i] + w[j]));
            if (m.convex_upwards())
                worst = std::max(worst, 0.5 * (w[i] + w[j]) - m(0.5 * (t[i] + t[j])));
        }
    }
    return {worst <= tol, std::max(worst, 0.0)};
}

bool has_infinite_slope(const Modulus& m, int k_max) {
    if (k_max < 8) throw DomainError("has_infinite_slope needs k_max >= 8");
    auto ratio = [&](int k) { return m(std::ldexp(1.0, -k)) * std::ldexp(1.0, k); };
    double prev = ratio(k_max / 2);
    for (int k = k_max / 2 + 1; k <= k_max; ++k) {
        const double r = ratio(k);
        if (!(r > prev)) return false;
        prev = r;
    }
    return true;
}

}  // namespace vpsum
