#include "dce/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dce/errors.hpp"

namespace dce::reputation {

namespace {

constexpr double kEqTol = 1e-9;

bool near(double a, double b) { return std::abs(a - b) <= kEqTol; }
bool leq(double a, double b) { return a <= b + kEqTol; }

struct Check {
    bool ok = true;
    std::string failed;

    void require(bool cond, const char* what) {
        if (ok && !cond) {
            ok = false;
            failed = what;
        }
    }
};

Check check_autarky(const ContractPlan& plan) {
    Check c;
    c.require(plan.date0.b == 0.0 && plan.date0.R == 0.0 && plan.date1.b == 0.0 && plan.date1.R == 0.0,
              "I: all contracts must be autarkic");
    return c;
}

Check check_first_date_separation(const ContractPlan& plan, double pi0, double beta, double y1, double y2) {
    const double b0 = plan.date0.b, R1 = plan.date0.R, b1 = plan.date1.b, R2 = plan.date1.R;
    Check c;
    c.require(pi0 >= beta * beta, "II(i): pi0 >= beta^2");
    c.require(near(b0, pi0 * R1), "II(i): b0 = pi0 R1");
    c.require(near(b1, R2), "II(i): b1 = R2");
    c.require(leq(R1, y1 + b1), "II(i): R1 <= y1 + b1");
    if (pi0 < beta) c.require(leq(R1, beta * (1.0 - beta) / (beta - pi0) * b1), "II(i): R1 <= beta(1-beta)/(beta-pi0) b1");
    c.require(leq(b1, R1), "II(i): R1 >= b1");
    c.require(leq(R2, y2), "II(i): R2 <= y2");
    c.require(R1 > 0.0, "II(i): R1 > 0");
    return c;
}

Check check_mixed(const ContractPlan& plan, double pi0, double beta, double y1, double y2, double& delta) {
    const double b0 = plan.date0.b, R1 = plan.date0.R, b1 = plan.date1.b, R2 = plan.date1.R;
    Check c;
    c.require(pi0 >= beta * beta, "II(ii): pi0 >= beta^2");
    c.require(near(b0, pi0 * R2), "II(ii): b0 = pi0 R2");
    c.require(near(b1, R1), "II(ii): b1 = R1");
    c.require(leq(R2, y1 + y2), "II(ii): R2 <= y1 + y2");
    c.require(b1 > 0.0 && pi0 > 0.0 && pi0 < 1.0, "II(ii): b1 > 0 and 0 < pi0 < 1");
    if (c.ok) {
        try {
            delta = mixed_default_prob(b1, R2, pi0);
        } catch (const OutOfRange&) {
            c.require(false, "II(ii): default probability outside [0, 1]");
        }
    }
    return c;
}

Check check_pooling(const ContractPlan& plan, double pi0, double beta, double y1, double y2) {
    const double b0 = plan.date0.b, R1 = plan.date0.R, b1 = plan.date1.b, R2 = plan.date1.R;
    Check c;
    c.require(pi0 >= beta, "III: pi0 >= beta");
    c.require(near(b0, R1), "III: b0 = R1");
    c.require(near(b1, pi0 * R2), "III: b1 = pi0 R2");
    c.require(leq(R1, y1 + b1), "III: R1 <= y1 + b1");
    c.require(leq(R2, y2), "III: R2 <= y2");
    c.require(R2 > 0.0, "III: R2 > 0");
    return c;
}

}  // namespace

std::string_view to_string(Region r) noexcept {
    switch (r) {
        case Region::Autarky: return "Autarky";
        case Region::Pooling: return "Pooling";
        case Region::Separating: return "Separating";
    }
    return "?";
}

Region region_from_string(std::string_view s) {
    if (s == "Autarky") return Region::Autarky;
    if (s == "Pooling") return Region::Pooling;
    if (s == "Separating") return Region::Separating;
    throw DomainError("region", "region: unknown label '" + std::string(s) + "'");
}

std::string_view to_string(EquilibriumClass c) noexcept {
    switch (c) {
        case EquilibriumClass::I: return "I";
        case EquilibriumClass::IIi: return "II(i)";
        case EquilibriumClass::IIii: return "II(ii)";
        case EquilibriumClass::III: return "III";
        case EquilibriumClass::NotAnEquilibrium: return "NotAnEquilibrium";
    }
    return "?";
}

double max_riskless_loan(double pi0, double beta, double y2) {
    return std::max((pi0 - beta) * y2 / (1.0 - beta), 0.0);
}

double income_growth(double y1, double y2) {
    if (!(y1 > 0.0)) throw DomainError("y1", "y1: must be positive for income growth");
    return (y2 - y1) / y1;
}

double pooling_utility(double pi0, double beta, double y2) {
    return (1.0 - beta * beta) * max_riskless_loan(pi0, beta, y2);
}

double separating_utility(double pi0, double beta, double y1, double y2) {
    return (pi0 - beta) * y1 + (pi0 - beta * beta) * max_riskless_loan(pi0, beta, y2);
}

RegionResult classify_region(double pi0, double beta, double y1, double y2) {
    RegionResult out;
    out.growth = income_growth(y1, y2);
    out.pooling_lower = beta;
    out.pooling_upper = 1.0 + out.growth > 0.0 ? 1.0 - (1.0 - beta) / (1.0 + out.growth)
                                               : -std::numeric_limits<double>::infinity();
    const double cap = max_riskless_loan(pi0, beta, y2);
    if (pi0 < beta) {
        out.region = Region::Autarky;
        return out;
    }
    out.u_pool = pooling_utility(pi0, beta, y2);
    out.u_sep = separating_utility(pi0, beta, y1, y2);
    // pi0 < pooling_upper, rearranged so that g = 0 leaves no rounding sliver above beta.
    if ((1.0 - pi0) * y2 > (1.0 - beta) * y1) {
        out.region = Region::Pooling;
        out.plan = {Contract{cap, cap, false}, Contract{pi0 * y2, y2, false}, 0.0};
    } else {
        out.region = Region::Separating;
        const double R1 = cap + y1;
        out.plan = {Contract{pi0 * R1, R1, false}, Contract{cap, cap, false}, 1.0};
    }
    return out;
}

double mixed_default_prob(double b1, double R2, double pi0) {
    if (!(b1 > 0.0)) throw DomainError("b1", "b1: must be positive");
    if (!(pi0 > 0.0 && pi0 < 1.0)) throw DomainError("pi0", "pi0: must lie in (0, 1)");
    const double delta = 1.0 - pi0 / (1.0 - pi0) * (R2 / b1 - 1.0);
    if (delta < -kEqTol || delta > 1.0 + kEqTol) {
        throw OutOfRange("mixed default probability outside [0, 1]: R2/b1 must lie in [1, 1/pi0]", delta);
    }
    return std::clamp(delta, 0.0, 1.0);
}

ClassResult classify_plan(const ContractPlan& plan, double pi0, double beta, double y1, double y2) {
    ClassResult out;
    auto record = [&](const Check& c, EquilibriumClass cls, double delta) {
        if (c.ok) {
            out.satisfied.push_back(cls);
            if (out.first == EquilibriumClass::NotAnEquilibrium) {
                out.first = cls;
                out.strategic_default = delta;
            }
        } else {
            if (!out.violation.empty()) out.violation += "; ";
            out.violation += c.failed;
        }
    };
    record(check_autarky(plan), EquilibriumClass::I, 0.0);
    record(check_first_date_separation(plan, pi0, beta, y1, y2), EquilibriumClass::IIi, 1.0);
    double delta = 0.0;
    const Check mixed = check_mixed(plan, pi0, beta, y1, y2, delta);
    record(mixed, EquilibriumClass::IIii, delta);
    record(check_pooling(plan, pi0, beta, y1, y2), EquilibriumClass::III, 0.0);
    if (out.first != EquilibriumClass::NotAnEquilibrium) out.violation.clear();
    return out;
}

}  // namespace dce::reputation
