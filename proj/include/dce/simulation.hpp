#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dce/combined.hpp"
#include "dce/model.hpp"

namespace dce::sim {

struct SimStats {
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
    std::size_t strategic_paths = 0;
    double sell_rate_date0 = 0.0;
    double keep_rate_date0 = 0.0;
    double date1_default_rate = 0.0;
    double date1_default_se = 0.0;
    double date2_default_rate = 0.0;
    double date2_default_se = 0.0;
    double strategic_date1_default_rate = 0.0;
    double strategic_date1_default_se = 0.0;
    /// Share of repaying borrowers whose date-1 loan request was turned down.
    double rationed_rate = 0.0;
    double mean_posterior_after_repay = 0.0;
    std::array<std::size_t, 4> region_counts{};  ///< indexed by combined::Date1Region

    bool operator==(const SimStats&) const = default;
};

struct MonteCarloOptions {
    /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
    std::size_t threads = 0;
    /// Fraction of simulated borrowers who are honest. Defaults to the lenders' prior pi0.
    std::optional<double> honest_share;
};

/// Plays the date-1 and date-2 equilibrium after the asset was kept with R1 due,
/// one independent price draw and borrower per path. The date-0 rates report the
/// equilibrium decision for `params`; everything else is conditional on keeping.
SimStats monte_carlo(const ModelParams& params, double R1, std::size_t n, std::uint64_t seed,
                     const MonteCarloOptions& options = {});

/// Population mass of one borrower type in one cohort, split by credit status.
struct TypeMasses {
    double sold = 0.0;         ///< sold the asset at birth, autarky afterwards
    double borrowing = 0.0;    ///< kept the asset, date-0 loan outstanding
    double defaulted = 0.0;    ///< defaulted on the date-0 loan
    double repaid = 0.0;       ///< repaid, no date-1 loan offered
    double refinanced = 0.0;   ///< repaid and took a date-1 loan
    double rationed = 0.0;     ///< repaid, date-1 loan request turned down
    double late_default = 0.0; ///< defaulted on the date-1 loan
    double settled = 0.0;      ///< repaid the date-1 loan

    double total() const noexcept {
        return sold + borrowing + defaulted + repaid + refinanced + rationed + late_default + settled;
    }
    bool operator==(const TypeMasses&) const = default;
};

struct Cohort {
    int born = 0;
    double R1 = 0.0;
    combined::Verdict decision = combined::Verdict::Sell;
    TypeMasses honest;
    TypeMasses strategic;

    bool operator==(const Cohort&) const = default;
};

/// Aggregates at one date. Young, middle and old are the cohorts born at t, t-1, t-2.
struct OlgPeriod {
    int date = 0;
    double price = 0.0;
    double young_keep = 0.0;
    double young_sell = 0.0;
    std::optional<combined::Date1Region> middle_region;  ///< empty when the middle cohort sold
    double middle_default = 0.0;
    double middle_strategic_default = 0.0;
    double middle_strategic_borrowers = 0.0;  ///< strategic mass with a date-0 loan due
    double middle_repay = 0.0;
    double middle_refinanced = 0.0;
    double middle_rationed = 0.0;
    double old_default = 0.0;
    double old_repay = 0.0;
    double mass_error = 0.0;  ///< max |cohort type mass - entering mass| over living cohorts
    std::vector<Cohort> cohorts;  ///< living cohorts, youngest first

    bool operator==(const OlgPeriod&) const = default;
};

struct OlgResult {
    std::uint64_t seed = 0;
    std::vector<double> prices;
    std::vector<OlgPeriod> periods;
    double max_mass_error = 0.0;

    bool operator==(const OlgResult&) const = default;
};

/// Three overlapping generations facing one exogenous price path. Each cohort
/// enters with mass 1, a share pi0 of it honest. Throws DomainError for fewer than 3 dates.
OlgResult olg_simulate(const ModelParams& params, std::span<const double> prices);
/// Draws the shared price path from the uniform martingale starting at params.p0.
OlgResult olg_simulate(const ModelParams& params, int periods, std::uint64_t seed);

struct EquilibriumSummary {
    double price = 0.0;
    double R1 = 0.0;
    bool R1_optimised = false;
    combined::Date1Outcome date1;
    double u_keep = 0.0;
    double u_sell = 0.0;
    combined::Verdict decision = combined::Verdict::Sell;

    bool operator==(const EquilibriumSummary&) const = default;
};

/// Same game with the price fixed at p on every date. Without R1 the honest
/// type's best promise in [0, 2y] is used.
EquilibriumSummary constant_price_solve(const ModelParams& params, double p, std::optional<double> R1 = std::nullopt);

}  // namespace dce::sim
