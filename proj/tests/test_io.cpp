#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include "vpsum/errors.hpp"
#include "vpsum/report_io.hpp"
#include "vpsum/sweep.hpp"

using namespace vpsum;

TEST(FormatDouble, RoundTrips) {
    for (const double x : {0.1, 1.0 / 3.0, 1e-300, 4.9e-324, -2.5, 0.0, 123456789.123})
        EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Sweep, ParsesAndExpands) {
    const auto lines = parse_sweep(R"(
[[line]]
modulus = "holder:0.5"
q = [0.3, 0.5]
p = [1, 2]
m = [64, 128]

[[line]]
modulus = "linear"
q = 0.5
beta = 1.5
m = [32]
)");
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0].q, 0.3);
    EXPECT_EQ(lines[0].p, 1);
    EXPECT_EQ(lines[1].p, 2);
    EXPECT_EQ(lines[2].q, 0.5);
    EXPECT_EQ(lines[0].gaps, (std::vector<int>{64, 128}));
    EXPECT_EQ(lines[4].modulus, "linear");
    EXPECT_EQ(lines[4].beta, 1.5);
    EXPECT_EQ(lines[4].p, 1);
}

TEST(Sweep, RejectsMalformedInput) {
    EXPECT_THROW((void)parse_sweep("[[line]]\nq = 0.5\nm = [64]\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("[[line]]\nmodulus = \"linear\"\nm = [64]\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("[[line]]\nmodulus = \"linear\"\nq = 0.5\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("[[line]]\nmodulus = \"linear\"\nq = 0.5\nm = [64]\nn = 3\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("[[line]]\nmodulus = \"linear\"\nq = 0.5\nm = [1.5]\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("[[line]]\nmodulus = \"linear\"\nq = 0.5\nm = []\n"), ParseError);
    EXPECT_THROW((void)parse_sweep("not toml ="), ParseError);
    EXPECT_THROW((void)parse_sweep(""), ParseError);
    EXPECT_THROW((void)load_sweep("/nonexistent/sweep.toml"), ParseError);
}

TEST(Sweep, LoadsFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "vpsum_sweep_test.toml";
    std::ofstream(path) << "[[line]]\nmodulus = \"holder:0.5\"\nq = 0.5\nm = [64]\n";
    EXPECT_EQ(load_sweep(path).size(), 1u);
    std::filesystem::remove(path);
}

TEST(Csv, HeaderAndRow) {
    DeviationReport r;
    r.omega = "holder:0.5";
    r.q = 0.5;
    r.n = 128;
    r.p = 1;
    r.grid = 4096;
    r.empirical_sup = 1e-40;
    r.principal = 2e-40;
    r.remainder_scale = 3e-40;
    r.ratio = 0.5;
    EXPECT_EQ(csv_header(), "omega,q,beta,n,p,grid,empirical_sup,principal,remainder_scale,ratio");
    EXPECT_EQ(csv_row(r), "holder:0.5,0.5,0,128,1,4096,1e-40,2e-40,3e-40,0.5");
    EXPECT_EQ(to_csv({r, r}), csv_header() + "\n" + csv_row(r) + "\n" + csv_row(r) + "\n");
}

TEST(Json, MirrorsReportFields) {
    const auto r = estimate_sup_deviation(make_holder(0.5), PoissonParams(0.5, 0.0), VPParams(64, 1));
    const auto j = nlohmann::json::parse(to_json(r));
    EXPECT_EQ(j["omega"], "holder:0.5");
    EXPECT_EQ(j["n"], 64);
    EXPECT_EQ(j["ratio"].get<double>(), r.ratio);
    EXPECT_EQ(j["empirical_sup"].get<double>(), r.empirical_sup);
    EXPECT_TRUE(j["bracket_low"].is_null());
    EXPECT_EQ(to_json(r), to_json(estimate_sup_deviation(make_holder(0.5), PoissonParams(0.5, 0.0), VPParams(64, 1))));
}

TEST(Json, PredictionAndIdentities) {
    const auto t = theorem3_bracket(make_holder(0.5), PoissonParams(0.5, 0.0), VPParams(64, 2));
    const auto j = nlohmann::json::parse(to_json(t));
    EXPECT_EQ(j["bracket_high"].get<double>(), *t.bracket_high());
    const auto csv = to_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "principal,remainder_scale,bracket_low,bracket_high");
    const auto ij = nlohmann::json::parse(to_json(verify_identities(IdentityMode::single_point)));
    EXPECT_TRUE(ij["ok"].get<bool>());
}

TEST(Gnuplot, BlocksPerLine) {
    const auto v = verify_theorem(TheoremId::one, {SweepLine{"holder:0.5", 0.5, 0.0, 1, {64, 128}},
                                                   SweepLine{"holder:0.5", 0.5, 0.0, 2, {64}}});
    const auto text = gnuplot_series(v);
    EXPECT_NE(text.find("\n\n\n"), std::string::npos);
    EXPECT_NE(text.find("64 "), std::string::npos);
    EXPECT_NE(text.find("128 "), std::string::npos);
    const auto summary = to_text(v);
    EXPECT_NE(summary.find("conventions"), std::string::npos);
    EXPECT_NE(summary.find("PASS"), std::string::npos);
}
