#include "dce/collateral.hpp"

#include <algorithm>
#include <cmath>

#include "dce/errors.hpp"

namespace dce::collateral {

namespace {

void check_beta(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta", "beta: must lie in (0, 1)");
}

void check_dividend(double x) {
    if (!(x >= 0.0)) throw DomainError("x", "x: must be non-negative");
}

}  // namespace

double date2_default_threshold(double R2, double x) {
    if (!(R2 >= 0.0)) throw DomainError("R2", "R2: must be non-negative");
    check_dividend(x);
    return std::max(R2 - x, 0.0);
}

double date1_switch_price(double x, double beta) {
    check_beta(beta);
    check_dividend(x);
    return x / (2.0 * (1.0 - beta));
}

Date1Contract date1_optimal_contract(double p1, double x, double beta) {
    if (!(p1 > 0.0)) throw DomainError("p1", "p1: must be positive");
    const double cut = date1_switch_price(x, beta);
    if (p1 < cut) return {Contract{x, x, true}, ContractMode::Safe, cut};
    const double b = p1 + (1.0 - 2.0 * beta) / p1 * cut * cut;
    const double R = 2.0 * p1 - beta * x / (1.0 - beta);
    return {Contract{b, R, true}, ContractMode::Risky, cut};
}

double date1_contract_value(double R2, double p1, double x, double beta) {
    // Lender receives R2 when p2 >= R2 - x and seizes p2 otherwise.
    const double top = 2.0 * p1;
    const double cut = std::clamp(R2 - x, 0.0, top);
    const double loan = (1.0 - cut / top) * R2 + cut * cut / (2.0 * top);
    // Borrower keeps x + p2 - R2 on [cut, 2 p1].
    const double lo_gain = x + cut - R2;
    const double hi_gain = x + top - R2;
    const double keep = (top - cut) * 0.5 * (lo_gain + hi_gain) / top;
    return loan + beta * keep;
}

double date1_keep_utility(double p1, double R1, double x, double beta) {
    if (p1 >= date1_switch_price(x, beta)) {
        const double bonus = x > 0.0 ? x * x / (4.0 * p1 * (1.0 - beta)) : 0.0;
        return x - R1 + p1 + bonus;
    }
    return 2.0 * x - R1 + beta * p1;
}

double date1_sell_utility(double p1, double R1, double x) { return x - R1 + p1; }

double date1_repayment_threshold(double R1, double x, double beta) {
    check_beta(beta);
    check_dividend(x);
    if (!(R1 >= 0.0)) throw DomainError("R1", "R1: must be non-negative");
    if (R1 <= 2.0 * x) return 0.0;
    const double cut = 2.0 * x + beta * x / (2.0 * (1.0 - beta));
    if (R1 <= cut) return (R1 - 2.0 * x) / beta;
    const double a = R1 - x;
    return 0.5 * (a + std::sqrt(a * a - x * x / (1.0 - beta)));
}

double date0_sell_threshold(double x, double beta) {
    check_beta(beta);
    check_dividend(x);
    return 2.0 * x / (1.0 - beta * beta);
}

CollateralDecision date0_decision(double p0, double x, double beta) {
    if (!(p0 > 0.0)) throw DomainError("p0", "p0: must be positive");
    const double threshold = date0_sell_threshold(x, beta);
    if (p0 >= threshold) {
        const double R = 2.0 * p0 + x + x * x / (8.0 * p0 * (1.0 - beta));
        return {Action::Sell, Contract{p0, R, true}, threshold};
    }
    return {Action::KeepAndBorrow, Contract{2.0 * x, 2.0 * x, true}, threshold};
}

}  // namespace dce::collateral
