#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dce/model.hpp"

// No-asset benchmark: borrowing is secured only by the lenders' belief that
// the borrower is honest.
namespace dce::reputation {

enum class Region { Autarky, Pooling, Separating };

std::string_view to_string(Region r) noexcept;
Region region_from_string(std::string_view s);

struct ContractPlan {
    Contract date0;
    Contract date1;
    double strategic_default_date1 = 0.0;

    bool operator==(const ContractPlan&) const = default;
};

struct RegionResult {
    Region region = Region::Autarky;
    ContractPlan plan;
    double growth = 0.0;        ///< (y2 - y1) / y1
    double pooling_lower = 0.0;  ///< beta
    double pooling_upper = 0.0;  ///< 1 - (1 - beta) / (1 + growth)
    double u_pool = 0.0;
    double u_sep = 0.0;

    bool operator==(const RegionResult&) const = default;
};

enum class EquilibriumClass { I, IIi, IIii, III, NotAnEquilibrium };

std::string_view to_string(EquilibriumClass c) noexcept;

struct ClassResult {
    EquilibriumClass first = EquilibriumClass::NotAnEquilibrium;
    std::vector<EquilibriumClass> satisfied;
    /// First failed condition of every rejected class, empty when some class matched.
    std::string violation;
    /// Strategic date-1 default probability implied by the first matching class.
    std::optional<double> strategic_default;
};

/// Largest date-1 repayment the strategic type still prefers to honour:
/// max((pi0 - beta) y2 / (1 - beta), 0).
double max_riskless_loan(double pi0, double beta, double y2);

double income_growth(double y1, double y2);

/// Honest type's utility gain over autarky in the two candidate equilibria.
double pooling_utility(double pi0, double beta, double y2);
double separating_utility(double pi0, double beta, double y1, double y2);

/// Selected equilibrium and its contracts. Throws DomainError if y1 == 0.
RegionResult classify_region(double pi0, double beta, double y1, double y2);

/// Strategic type's date-1 default probability that keeps lenders at zero profit
/// when b1 is lent against a promised R2. Throws OutOfRange outside [0, 1].
double mixed_default_prob(double b1, double R2, double pi0);

/// Membership check against each equilibrium class, in order I, II(i), II(ii), III.
ClassResult classify_plan(const ContractPlan& plan, double pi0, double beta, double y1, double y2);

}  // namespace dce::reputation
