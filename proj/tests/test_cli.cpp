#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "dce/errors.hpp"
#include "dce/oracle.hpp"
#include "dce/serialization.hpp"

using namespace dce;
using namespace dce::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::runtime_error("missing column " + name);
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "dce_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, SolveCombinedKeeps) {
    const Result r = call({"solve", "--regime", "combined", "--beta", "0.5", "--pi0", "0.4", "--y", "1", "--p0", "1.2"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["decision"], "Keep");
    EXPECT_NEAR(j["u_keep"].get<double>(), 2.021875, 1e-12);
    EXPECT_EQ(j.get<combined::Date0Solution>().R1_star, 2.0);
}

TEST(Cli, ClassifyReputationPooling) {
    const Result r = call({"classify", "--regime", "reputation", "--beta", "0.5", "--pi0", "0.6", "--y1", "5", "--y2", "10"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["region"], "Pooling");
    const auto plan = j["plan"].get<std::vector<std::vector<double>>>();
    ASSERT_EQ(plan.size(), 2u);
    EXPECT_NEAR(plan[0][0], 2.0, 1e-12);
    EXPECT_NEAR(plan[0][1], 2.0, 1e-12);
    EXPECT_NEAR(plan[1][0], 6.0, 1e-12);
    EXPECT_NEAR(plan[1][1], 10.0, 1e-12);
}

TEST(Cli, ClassifyChecksAPlan) {
    const Result r = call({"classify", "--regime", "reputation", "--beta", "0.5", "--pi0", "0.4", "--y1", "5", "--y2",
                           "10", "--plan", "3.2,5,5,8"});
    ASSERT_EQ(r.code, Ok) << r.err;
    EXPECT_EQ(json::parse(r.out)["equilibrium_class"]["class"], "II(ii)");
}

TEST(Cli, Fig2WritesRegionsWithBoundaries) {
    const fs::path path = scratch("fig2.csv");
    const Result r = call({"figures", "--which", "fig2", "--g", "1", "--points", "40", "--out", path.string()});
    ASSERT_EQ(r.code, Ok) << r.err;
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto rows = read_csv(text.str());
    ASSERT_EQ(rows.size(), 1u + 40u * 40u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"beta", "pi0", "g", "label"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double beta = std::stod(rows[i][0]);
        const double pi0 = std::stod(rows[i][1]);
        std::string expected = "Separating";
        if (pi0 < beta) expected = "Autarky";
        else if (pi0 < (1.0 + beta) / 2.0) expected = "Pooling";
        EXPECT_EQ(rows[i][3], expected) << "beta=" << beta << " pi0=" << pi0;
    }
}

TEST(Cli, Fig2Boundaries) {
    const Result r = call({"figures", "--which", "fig2-boundaries", "--g", "1", "--points", "10"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const auto rows = read_csv(r.out);
    ASSERT_EQ(rows.size(), 11u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double beta = std::stod(rows[i][0]);
        EXPECT_NEAR(std::stod(rows[i][2]), beta, 1e-11);
        EXPECT_NEAR(std::stod(rows[i][3]), (1.0 + beta) / 2.0, 1e-11);
    }
}

TEST(Cli, Fig3Regions) {
    const Result r = call({"figures", "--which", "fig3", "--beta", "0.5", "--pi0", "0.2", "--y", "1", "--p0", "1.2",
                           "--R1", "1.5", "--points", "11"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const auto rows = read_csv(r.out);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"p1", "region", "pi1", "delta1", "alpha"}));
    EXPECT_EQ(rows[1][1], "CompleteSeparation");
    EXPECT_EQ(rows[11][1], "PoolingAutarky");
}

TEST(Cli, SweepFlipsOnceAtOracleBound) {
    const Result r = call({"sweep", "--target", "solve", "--regime", "combined", "--beta", "0.5", "--y", "1", "--p0",
                           "1.2", "--axis", "pi0", "--range", "0.05", "0.45", "0.05", "--format", "csv"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const auto rows = read_csv(r.out);
    ASSERT_EQ(rows.size(), 10u);
    const std::size_t decision = column(rows[0], "decision");
    const double star = oracle::oracle_pi0_star(0.5, 1.0, 1.2);
    int flips = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double pi0 = std::stod(rows[i][0]);
        EXPECT_EQ(rows[i][decision], pi0 >= star ? "Keep" : "Sell") << "pi0=" << pi0;
        if (i > 1 && rows[i][decision] != rows[i - 1][decision]) {
            ++flips;
            EXPECT_EQ(rows[i - 1][decision], "Sell");
            EXPECT_NEAR(pi0, star, 0.05);
        }
    }
    EXPECT_EQ(flips, 1);
}

TEST(Cli, SweepEmptyRange) {
    const Result r = call({"sweep", "--axis", "pi0", "--range", "0.4", "0.1", "0.05"});
    EXPECT_EQ(r.code, DomainFailure);
    EXPECT_NE(r.err.find("range error"), std::string::npos);
    EXPECT_THROW(sweep_points({0.1, 0.4, 0.0}), RangeError);
    EXPECT_EQ(sweep_points({0.05, 0.45, 0.05}).size(), 9u);
}

TEST(Cli, VerifyPasses) {
    const Result r = call({"verify"});
    EXPECT_EQ(r.code, Ok) << r.out;
    EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, VerifyFailsOnImpossibleTolerance) {
    // The utility residual is rounding noise of order 1e-16, so a zero-width band must fail.
    const Result r = call({"verify", "--tolerance", "1e-300"});
    EXPECT_EQ(r.code, VerifyFailure);
}

TEST(Cli, DomainErrorsExitTwo) {
    EXPECT_EQ(call({"solve", "--beta", "1.0"}).code, DomainFailure);
    EXPECT_EQ(call({"solve", "--regime", "combined", "--beta", "0.5", "--pi0", "0.6", "--y", "1"}).code, DomainFailure);
    EXPECT_EQ(call({"solve", "--regime", "combined", "--beta", "0.5", "--pi0", "0.3", "--y", "1", "--R1", "2.5"}).code,
              DomainFailure);
}

TEST(Cli, UsageAndIoErrorsExitOne) {
    EXPECT_EQ(call({}).code, UsageError);
    EXPECT_EQ(call({"bogus"}).code, UsageError);
    EXPECT_EQ(call({"solve", "--config", "/nonexistent/dce/config.json"}).code, UsageError);
    const Result r = call({"solve", "--out", "/nonexistent/dce/out.json"});
    EXPECT_EQ(r.code, UsageError);
    EXPECT_NE(r.err.find("/nonexistent/dce/out.json"), std::string::npos);
}

TEST(Cli, ConfigOverridesFlags) {
    const fs::path path = scratch("config.json");
    std::ofstream(path) << R"({"params": {"beta": 0.5, "pi0": 0.4, "y": 1, "p0": 1.2}, "regime": "combined"})";
    const Result r = call({"solve", "--regime", "reputation", "--pi0", "0.1", "--config", path.string()});
    ASSERT_EQ(r.code, Ok) << r.err;
    EXPECT_EQ(json::parse(r.out)["decision"], "Keep");

    std::ofstream(path) << R"({"pi0": 0.3, "bogus": 1})";
    EXPECT_EQ(call({"solve", "--config", path.string()}).code, DomainFailure);
    std::ofstream(path) << "{not json";
    EXPECT_EQ(call({"solve", "--config", path.string()}).code, DomainFailure);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("DCE_SEED", "17", 1);
    EXPECT_EQ(default_seed(), 17u);
    const std::vector<std::string> args{"simulate", "--beta", "0.5", "--pi0", "0.2", "--y", "1", "--p0", "1.2",
                                        "--R1",     "1.5",    "--paths", "5000"};
    const Result a = call(args);
    ASSERT_EQ(a.code, Ok) << a.err;
    EXPECT_EQ(json::parse(a.out)["seed"], 17);
    auto with_seed = args;
    with_seed.insert(with_seed.end(), {"--seed", "17"});
    EXPECT_EQ(call(with_seed).out, a.out);
    ::unsetenv("DCE_SEED");
    EXPECT_EQ(default_seed(), 0u);
}

TEST(Cli, OutputsRoundTrip) {
    const Result s = call({"simulate", "--beta", "0.5", "--pi0", "0.2", "--y", "1", "--p0", "1.2", "--R1", "1.5",
                           "--paths", "5000", "--seed", "3"});
    ASSERT_EQ(s.code, Ok) << s.err;
    const json j = json::parse(s.out);
    EXPECT_EQ(json(j.get<sim::SimStats>()), j);

    const Result o = call({"olg", "--beta", "0.5", "--pi0", "0.4", "--y", "1", "--p0", "1.2", "--periods", "6",
                           "--seed", "2"});
    ASSERT_EQ(o.code, Ok) << o.err;
    const json oj = json::parse(o.out);
    EXPECT_EQ(json(oj.get<sim::OlgResult>()), oj);
}

TEST(Cli, CsvFormatForSingleResult) {
    const Result r = call({"thresholds", "--regime", "collateral", "--beta", "0.5", "--x", "1", "--R1", "4",
                           "--format", "csv"});
    ASSERT_EQ(r.code, Ok) << r.err;
    const auto rows = read_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][column(rows[0], "p1_hat")], "2.82287565553");
    EXPECT_EQ(rows[1][column(rows[0], "p0_hat")], "2.66666666667");
}
