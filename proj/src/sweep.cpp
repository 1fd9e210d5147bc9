#include "vpsum/sweep.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <toml.hpp>

#include "vpsum/errors.hpp"

namespace vpsum {

namespace {

std::string where(std::size_t line) { return "sweep line " + std::to_string(line + 1) + ": "; }

template <class T>
std::vector<T> scalar_or_array(const toml::table& t, std::string_view key, std::size_t line,
                               std::optional<T> fallback) {
    const toml::node* node = t.get(key);
    if (node == nullptr) {
        if (fallback) return {*fallback};
        throw ParseError(where(line) + "missing key '" + std::string(key) + "'");
    }
    auto one = [&](const toml::node& n) -> T {
        if constexpr (std::is_same_v<T, double>) {
            if (auto v = n.value<double>()) return *v;
        } else {
            if (auto v = n.value_exact<int64_t>()) return static_cast<T>(*v);
        }
        throw ParseError(where(line) + "key '" + std::string(key) + "' has a value of the wrong type");
    };
    std::vector<T> out;
    if (const auto* arr = node->as_array()) {
        for (const auto& el : *arr) out.push_back(one(el));
        if (out.empty()) throw ParseError(where(line) + "key '" + std::string(key) + "' is an empty array");
    } else {
        out.push_back(one(*node));
    }
    return out;
}

}  // namespace

std::vector<SweepLine> parse_sweep(std::string_view text) {
    toml::table doc;
    try {
        doc = toml::parse(text);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << "sweep: " << e.description() << " at line " << e.source().begin.line;
        throw ParseError(msg.str());
    }
    const auto* lines = doc["line"].as_array();
    if (lines == nullptr || lines->empty()) throw ParseError("sweep: no [[line]] entries");

    std::vector<SweepLine> out;
    for (std::size_t li = 0; li < lines->size(); ++li) {
        const auto* t = lines->get(li)->as_table();
        if (t == nullptr) throw ParseError(where(li) + "entry is not a table");
        for (const auto& [k, v] : *t) {
            const auto key = k.str();
            if (key != "modulus" && key != "q" && key != "beta" && key != "p" && key != "m")
                throw ParseError(where(li) + "unknown key '" + std::string(key) + "'");
        }
        const auto modulus = (*t)["modulus"].value<std::string>();
        if (!modulus) throw ParseError(where(li) + "missing string key 'modulus'");
        const auto qs = scalar_or_array<double>(*t, "q", li, std::nullopt);
        const auto betas = scalar_or_array<double>(*t, "beta", li, 0.0);
        const auto ps = scalar_or_array<int>(*t, "p", li, 1);
        const auto gaps = scalar_or_array<int>(*t, "m", li, std::nullopt);
        for (const int g : gaps)
            if (g < 2) throw ParseError(where(li) + "values of m = n-p+1 must be >= 2");
        for (const int p : ps)
            if (p < 1) throw ParseError(where(li) + "p must be >= 1");
        for (const double q : qs)
            for (const double beta : betas)
                for (const int p : ps) out.push_back(SweepLine{*modulus, q, beta, p, gaps});
    }
    return out;
}

std::vector<SweepLine> load_sweep(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sweep file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sweep(ss.str());
}

}  // namespace vpsum
