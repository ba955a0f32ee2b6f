#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dce/model.hpp"
#include "dce/oracle.hpp"

namespace dce::cli {

enum ExitCode : int { Ok = 0, UsageError = 1, DomainFailure = 2, VerifyFailure = 3 };

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

struct RunConfig {
    std::string command;
    std::string regime = "combined";
    ModelParams params;
    oracle::GridSpec grid;
    std::string output;  ///< empty writes to stdout
    std::string format = "json";
    std::uint64_t seed = 0;

    std::optional<double> R1;
    std::optional<double> R2;
    std::optional<double> p1;
    std::optional<double> price;
    std::vector<double> plan;  ///< b0, R1, b1, R2

    std::string target = "solve";  ///< command evaluated at each sweep point
    std::string axis;
    SweepRange range;

    std::size_t paths = 1000000;
    std::size_t threads = 0;
    std::optional<double> honest_share;

    int periods = 100;
    std::vector<double> prices;

    std::string which = "fig2";
    double growth = 1.0;
    std::size_t points = 100;
};

/// Seed used when neither a flag nor the config sets one: $DCE_SEED, else 0.
std::uint64_t default_seed();

/// Overrides `cfg` with every key of a config document. Unknown keys throw DomainError.
void apply_config(const nlohmann::json& doc, RunConfig& cfg);

/// Evaluation points lo, lo + step, ... up to hi. Throws RangeError if lo >= hi or step <= 0.
std::vector<double> sweep_points(const SweepRange& r);

/// Result of one command as JSON (used by solve and as the row source of sweep).
nlohmann::json evaluate(const RunConfig& cfg);

/// Flattens nested objects and arrays to dotted column names.
void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<nlohmann::json>& values);

/// Full front end. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dce::cli
