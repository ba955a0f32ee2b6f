#include "dce/combined.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dce/errors.hpp"
#include "dce/oracle.hpp"

namespace dce::combined {

namespace {

void check_regime(const ModelParams& m) {
    validate_params(m);
    if (m.y1 != m.y2) throw DomainError("y2", "y2: must equal y1 in the combined regime");
    if (!(m.y1 > 0.0)) throw DomainError("y1", "y1: must be positive in the combined regime");
    if (m.x != 0.0) throw DomainError("x", "x: must be zero in the combined regime");
    if (!(m.pi0 < m.beta)) throw DomainError("pi0", "pi0: must be below beta in the combined regime");
}

}  // namespace

std::string_view to_string(Date1Region r) noexcept {
    switch (r) {
        case Date1Region::CompleteSeparation: return "CompleteSeparation";
        case Date1Region::PartialSeparation: return "PartialSeparation";
        case Date1Region::CreditRationing: return "CreditRationing";
        case Date1Region::PoolingAutarky: return "PoolingAutarky";
    }
    return "?";
}

Date1Region date1_region_from_string(std::string_view s) {
    for (auto r : {Date1Region::CompleteSeparation, Date1Region::PartialSeparation, Date1Region::CreditRationing,
                   Date1Region::PoolingAutarky}) {
        if (to_string(r) == s) return r;
    }
    throw DomainError("region", "region: unknown label '" + std::string(s) + "'");
}

std::string_view to_string(Date1Term t) noexcept {
    switch (t) {
        case Date1Term::LowerCut: return "lower_cut";
        case Date1Term::RationingCut: return "rationing_cut";
        case Date1Term::UpperCut: return "upper_cut";
        case Date1Term::SeparationPosterior: return "separation_posterior";
        case Date1Term::PartialPosterior: return "partial_posterior";
        case Date1Term::RationingPosterior: return "rationing_posterior";
        case Date1Term::PoolingPosterior: return "pooling_posterior";
        case Date1Term::SeparationDefault: return "separation_default";
        case Date1Term::PartialDefault: return "partial_default";
        case Date1Term::RationingDefault: return "rationing_default";
        case Date1Term::PoolingDefault: return "pooling_default";
        case Date1Term::SeparationAcceptance: return "separation_acceptance";
        case Date1Term::PartialAcceptance: return "partial_acceptance";
        case Date1Term::RationingAcceptance: return "rationing_acceptance";
        case Date1Term::PoolingAcceptance: return "pooling_acceptance";
        case Date1Term::SeparationUtility: return "separation_utility";
        case Date1Term::PartialUtility: return "partial_utility";
        case Date1Term::RationingUtility: return "rationing_utility";
        case Date1Term::PoolingUtility: return "pooling_utility";
        case Date1Term::Count: break;
    }
    return "?";
}

double lower_threshold(double R1, double y) { return R1 - y; }
double rationing_threshold(double R1, double beta, double y) { return R1 - beta * y; }
double upper_threshold(double R1) { return R1; }

Date1Outcome date1_behavior(double p1, double R1, const ModelParams& params) {
    return date1_behavior(p1, R1, params, Date1Perturbation{});
}

Date1Outcome date1_behavior(double p1, double R1, const ModelParams& params, const Date1Perturbation& shift) {
    check_regime(params);
    if (!(p1 >= 0.0)) throw DomainError("p1", "p1: must be non-negative");
    if (!(R1 >= 0.0)) throw DomainError("R1", "R1: must be non-negative");
    using T = Date1Term;
    const double beta = params.beta;
    const double pi0 = params.pi0;
    const double y = params.y();

    Date1Outcome o;
    if (p1 < lower_threshold(R1, y) + shift[T::LowerCut]) {
        o = {Date1Region::CompleteSeparation, 1.0, 1.0, 1.0, 2.0 * y - R1 + p1};
        o.pi1 += shift[T::SeparationPosterior];
        o.delta1 += shift[T::SeparationDefault];
        o.alpha += shift[T::SeparationAcceptance];
        o.u1_honest += shift[T::SeparationUtility];
    } else if (p1 < rationing_threshold(R1, beta, y) + shift[T::RationingCut]) {
        const double gap = R1 - p1;
        o = {Date1Region::PartialSeparation, gap / y, 1.0 - pi0 / (1.0 - pi0) * (y / gap - 1.0), 1.0, y};
        o.pi1 += shift[T::PartialPosterior];
        o.delta1 += shift[T::PartialDefault];
        o.alpha += shift[T::PartialAcceptance];
        o.u1_honest += shift[T::PartialUtility];
    } else if (p1 <= upper_threshold(R1) + shift[T::UpperCut]) {
        o = {Date1Region::CreditRationing, beta, (beta - pi0) / (beta * (1.0 - pi0)), (R1 - p1) / (beta * y),
             (1.0 + beta) * y - R1 + p1};
        o.pi1 += shift[T::RationingPosterior];
        o.delta1 += shift[T::RationingDefault];
        o.alpha += shift[T::RationingAcceptance];
        o.u1_honest += shift[T::RationingUtility];
    } else {
        o = {Date1Region::PoolingAutarky, pi0, 0.0, 1.0, (1.0 + beta) * y - R1 + p1};
        o.pi1 += shift[T::PoolingPosterior];
        o.delta1 += shift[T::PoolingDefault];
        o.alpha += shift[T::PoolingAcceptance];
        o.u1_honest += shift[T::PoolingUtility];
    }
    return o;
}

double strategic_repay_gain(const Date1Outcome& o, double p1, double R1, double beta, double y) {
    // Repaying keeps the sale proceeds and, with a good enough reputation, a loan it will never repay.
    const double loan = o.pi1 >= beta ? o.alpha * o.pi1 * y : 0.0;
    return -R1 + p1 + loan;
}

double repayment_share(const Date1Outcome& o, double pi0) { return o.pi1 == pi0 ? 1.0 : pi0 / o.pi1; }

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Keep ? "Keep" : "Sell"; }

Verdict verdict_from_string(std::string_view s) {
    if (s == "Keep") return Verdict::Keep;
    if (s == "Sell") return Verdict::Sell;
    throw DomainError("decision", "decision: unknown label '" + std::string(s) + "'");
}

KeepContract date1_keep_contract(double p1, double pi1, const ModelParams& params, double R1) {
    validate_params(params);
    if (!(p1 > 0.0)) throw DomainError("p1", "p1: must be positive");
    if (!(pi1 >= 0.0 && pi1 < 1.0)) throw DomainError("pi1", "pi1: must lie in [0, 1)");
    const double beta = params.beta;
    const double y = params.y();
    const double base = (1.0 + beta) * y - R1;

    KeepContract out;
    if (pi1 < beta) {
        out.contract = {(1.0 - beta * beta) / (1.0 - pi1) * p1, 2.0 * (1.0 - beta) / (1.0 - pi1) * p1, true};
        out.u_keep = base + beta * p1 + (1.0 - beta) * (1.0 - beta) / (1.0 - pi1) * p1;
        out.u_sell = base + p1;
    } else {
        out.contract = {pi1 * y + (1.0 - pi1) * p1, y, true};
        out.u_keep = base + beta * p1 + (pi1 - beta) * y + (1.0 - pi1) * p1;
        out.u_sell = base + p1 + (pi1 - beta) * y;
    }
    out.verdict = out.u_sell >= out.u_keep ? Verdict::Sell : Verdict::Keep;
    return out;
}

double closed_form_u_keep(double R1, const ModelParams& params) {
    check_regime(params);
    const double beta = params.beta;
    const double pi0 = params.pi0;
    const double y = params.y();
    const double p0 = params.p0;
    return -(1.0 - pi0) / (4.0 * p0) * R1 * R1 + (1.0 - beta) * (1.0 + beta * y / (2.0 * p0)) * R1 +
           (1.0 - beta) * (pi0 - beta * (1.0 + beta)) * y * y / (4.0 * p0) + beta * (1.0 + beta) * y + beta * p0;
}

double zero_profit_loan(double R1, const ModelParams& params) {
    check_regime(params);
    const double y = params.y();
    const double top = 2.0 * params.p0;
    // Lenders collect R1 from every repayer and the asset from every defaulter.
    auto repayment = [&](double p1) {
        const Date1Outcome o = date1_behavior(p1, R1, params);
        const double repay_share = repayment_share(o, params.pi0);
        return repay_share * R1 + (1.0 - repay_share) * p1;
    };
    const double cuts[] = {lower_threshold(R1, y), rationing_threshold(R1, params.beta, y), upper_threshold(R1)};
    return integrate_piecewise(repayment, cuts, 0.0, top) / top;
}

Date0Objective date0_objective(double R1, const ModelParams& params) {
    check_regime(params);
    const double y = params.y();
    if (!(R1 >= 0.0)) throw DomainError("R1", "R1: must be non-negative");
    if (R1 > 2.0 * y) throw DomainError("R1", "R1: must not exceed 2y");
    return {closed_form_u_keep(R1, params), zero_profit_loan(R1, params), R1 >= y && R1 <= 2.0 * params.p0};
}

double sell_utility(const ModelParams& params) {
    const double beta = params.beta;
    return beta * (1.0 + beta) * params.y() + params.p0;
}

double binding_income(const ModelParams& params) {
    const double beta = params.beta;
    return params.p0 / ((1.0 - params.pi0) / (1.0 - beta) - beta / 2.0);
}

Date0Solution optimal_R1(const ModelParams& params) {
    check_regime(params);
    const double beta = params.beta;
    const double y = params.y();
    Date0Solution s;
    s.R1_unconstrained = (1.0 - beta) * (2.0 * params.p0 + beta * y) / (1.0 - params.pi0);
    s.R1_star = std::min(s.R1_unconstrained, 2.0 * y);
    s.binding = y <= binding_income(params);
    const Date0Objective obj = date0_objective(s.R1_star, params);
    s.u_keep = obj.u_keep;
    s.b0 = obj.b0;
    s.within_derivation_domain = obj.within_derivation_domain;
    return s;
}

Date0Solution date0_decision(const ModelParams& params) {
    Date0Solution s = optimal_R1(params);
    s.u_sell = sell_utility(params);
    s.decision = s.u_keep >= s.u_sell ? Verdict::Keep : Verdict::Sell;
    return s;
}

Pi0Bound pi0_star(double beta, double y, double p0) {
    validate_params(ModelParams{beta, 0.0, y, y, p0, 0.0});
    if (!(y > 0.0)) throw DomainError("y1", "y1: must be positive in the combined regime");
    const double r = p0 / y;
    const double b2 = beta * beta;
    const double constant = (beta * (3.0 + b2) - 4.0 * (1.0 + b2)) / (5.0 - beta);
    const double slope = 4.0 * (1.0 - beta) / (5.0 - beta) * (r - 2.0) * r;

    Pi0Bound out;
    out.first_branch = 1.0 - (1.0 - beta) * (r + beta / 2.0);
    out.second_branch = slope + constant;
    out.second_branch_corrected = slope - constant;
    out.literal = std::max(out.first_branch, out.second_branch);
    out.oracle = oracle::oracle_pi0_star(beta, y, p0);
    out.literal_disagrees = std::abs(out.literal - out.oracle) > 1e-3;
    out.second_branch_disagrees = std::abs(out.second_branch - out.oracle) > 1e-3;
    out.interval_lo = 1.0 - beta / 2.0;
    out.interval_hi = 1.0 + std::sqrt(2.0 / (1.0 - beta) - beta / 2.0 * (1.0 - beta / 2.0));
    return out;
}

}  // namespace dce::combined
