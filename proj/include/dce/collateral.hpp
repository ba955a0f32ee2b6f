#pragma once

#include "dce/model.hpp"

// Benchmark with no reputation (lenders know the borrower is strategic):
// the asset is the only thing that can secure a loan.
namespace dce::collateral {

enum class Action { Sell, KeepAndBorrow };
enum class ContractMode { Safe, Risky };

struct CollateralDecision {
    Action action = Action::Sell;
    /// For Sell this is the payoff-equivalent risky contract, defaulted on with probability one.
    Contract contract;
    /// Date-0 price at which the borrower switches from keeping to selling.
    double threshold = 0.0;

    bool operator==(const CollateralDecision&) const = default;
};

struct Date1Contract {
    Contract contract;
    ContractMode mode = ContractMode::Safe;
    /// Price at which the date-1 contract switches from Safe to Risky, x / (2(1 - beta)).
    double switch_price = 0.0;
};

/// Date-2 default threshold R2 - x, floored at zero. Default iff p2 < threshold.
double date2_default_threshold(double R2, double x);

/// Price at which the date-1 contract switches from Safe to Risky.
double date1_switch_price(double x, double beta);

/// Date-1 contract offered by a borrower who kept the asset and repaid.
Date1Contract date1_optimal_contract(double p1, double x, double beta);

/// Date-1 borrower value of offering (b1(R2), R2) given p1, before subtracting
/// R1 and adding x: b1(R2) + beta * E[max(x + p2 - R2, 0)], p2 ~ U[0, 2 p1].
double date1_contract_value(double R2, double p1, double x, double beta);

/// Borrower's date-1 utility from repaying R1 and keeping the asset to borrow against it.
double date1_keep_utility(double p1, double R1, double x, double beta);

/// Utility from repaying R1 and selling the asset.
double date1_sell_utility(double p1, double R1, double x);

/// Lowest p1 at which R1 is repaid (the borrower's keep utility is non-negative).
double date1_repayment_threshold(double R1, double x, double beta);

/// Price above which the asset is sold at date 0, 2x / (1 - beta^2).
double date0_sell_threshold(double x, double beta);

/// Date-0 keep/sell decision. Ties at the threshold sell.
CollateralDecision date0_decision(double p0, double x, double beta);

}  // namespace dce::collateral
