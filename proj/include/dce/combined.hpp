#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "dce/model.hpp"

// Collateral and reputation together: y1 = y2 = y, x = 0, pi0 < beta.
namespace dce::combined {

enum class Date1Region { CompleteSeparation, PartialSeparation, CreditRationing, PoolingAutarky };

std::string_view to_string(Date1Region r) noexcept;
Date1Region date1_region_from_string(std::string_view s);

struct Date1Outcome {
    Date1Region region = Date1Region::PoolingAutarky;
    double pi1 = 0.0;
    double delta1 = 0.0;
    double alpha = 1.0;
    double u1_honest = 0.0;

    bool operator==(const Date1Outcome&) const = default;
};

/// Named entries of the piecewise date-1 system. The three cuts shift the region
/// boundaries; the remaining entries shift one output on one piece.
enum class Date1Term : std::size_t {
    LowerCut,
    RationingCut,
    UpperCut,
    SeparationPosterior,
    PartialPosterior,
    RationingPosterior,
    PoolingPosterior,
    SeparationDefault,
    PartialDefault,
    RationingDefault,
    PoolingDefault,
    SeparationAcceptance,
    PartialAcceptance,
    RationingAcceptance,
    PoolingAcceptance,
    SeparationUtility,
    PartialUtility,
    RationingUtility,
    PoolingUtility,
    Count
};

inline constexpr std::size_t kDate1TermCount = static_cast<std::size_t>(Date1Term::Count);

std::string_view to_string(Date1Term t) noexcept;

/// Additive offsets applied on top of the equilibrium formulas. All zero by default;
/// non-zero offsets exist so the residual checker can be shown to catch them.
struct Date1Perturbation {
    std::array<double, kDate1TermCount> offset{};

    double& operator[](Date1Term t) { return offset[static_cast<std::size_t>(t)]; }
    double operator[](Date1Term t) const { return offset[static_cast<std::size_t>(t)]; }
};

/// Default below this price with certainty.
double lower_threshold(double R1, double y);
/// Lenders start rationing at this price.
double rationing_threshold(double R1, double beta, double y);
/// Above this price the strategic type always repays.
double upper_threshold(double R1);

/// Date-1 continuation after the asset was kept at date 0 and R1 is due.
/// Throws DomainError if pi0 >= beta, y <= 0, p1 < 0 or R1 < 0.
Date1Outcome date1_behavior(double p1, double R1, const ModelParams& params);
Date1Outcome date1_behavior(double p1, double R1, const ModelParams& params, const Date1Perturbation& shift);

/// Strategic type's payoff from repaying minus defaulting, given the outcome.
double strategic_repay_gain(const Date1Outcome& o, double p1, double R1, double beta, double y);

/// Share of date-0 borrowers who repay, pi0 / pi1. Equal to 1 where repaying reveals
/// nothing, including pi0 = pi1 = 0.
double repayment_share(const Date1Outcome& o, double pi0);

enum class Verdict { Keep, Sell };
std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view s);

struct KeepContract {
    Contract contract;
    Verdict verdict = Verdict::Sell;
    double u_keep = 0.0;  ///< honest date-1 utility from keeping the asset and borrowing against it
    double u_sell = 0.0;  ///< honest date-1 utility from selling it
};

/// Best collateralised contract for an honest borrower holding the asset at date 1
/// with reputation pi1, compared with selling the asset. R1 only shifts both utilities.
KeepContract date1_keep_contract(double p1, double pi1, const ModelParams& params, double R1 = 0.0);

struct Date0Objective {
    double u_keep = 0.0;
    double b0 = 0.0;
    /// True when R1 lies in [y, 2 p0], where every price cut falls inside the support
    /// of p1 and the closed form equals the expectation.
    bool within_derivation_domain = false;
};

/// Closed-form date-0 honest utility (no domain checks beyond pi0 < beta).
double closed_form_u_keep(double R1, const ModelParams& params);

/// Lenders' zero-profit date-0 loan, by exact piecewise quadrature over p1 ~ U[0, 2 p0].
double zero_profit_loan(double R1, const ModelParams& params);

/// Throws DomainError if R1 < 0, R1 > 2y or pi0 >= beta.
Date0Objective date0_objective(double R1, const ModelParams& params);

struct Date0Solution {
    double R1_star = 0.0;
    double R1_unconstrained = 0.0;
    double b0 = 0.0;
    bool binding = false;
    double u_keep = 0.0;
    double u_sell = 0.0;
    Verdict decision = Verdict::Sell;
    bool within_derivation_domain = false;

    bool operator==(const Date0Solution&) const = default;
};

/// beta (1 + beta) y + p0.
double sell_utility(const ModelParams& params);

/// Income level below which R1 <= 2y binds.
double binding_income(const ModelParams& params);

/// R1*, binding flag and u_keep at R1*. Decision fields are left at their defaults.
Date0Solution optimal_R1(const ModelParams& params);

/// Keep iff u_keep(R1*) >= u_sell.
Date0Solution date0_decision(const ModelParams& params);

struct Pi0Bound {
    double first_branch = 0.0;
    double second_branch = 0.0;            ///< as published
    double second_branch_corrected = 0.0;  ///< constant term with its sign flipped
    double literal = 0.0;                  ///< max of the published branches
    double oracle = 0.0;                   ///< bisection on the quadrature objective
    bool literal_disagrees = false;        ///< |literal - oracle| > 1e-3
    bool second_branch_disagrees = false;  ///< |second_branch - oracle| > 1e-3
    double interval_lo = 0.0;              ///< published keep interval for p0 / y
    double interval_hi = 0.0;

    bool operator==(const Pi0Bound&) const = default;
};

/// Both the published lower bound on pi0 and the oracle value.
Pi0Bound pi0_star(double beta, double y, double p0);

}  // namespace dce::combined
