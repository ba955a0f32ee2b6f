#include "dce/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dce/collateral.hpp"
#include "dce/errors.hpp"

namespace dce::oracle {

namespace {

using combined::Date1Outcome;
using combined::Date1Region;

double outside_unit(double v) { return std::max({0.0, -v, v - 1.0}); }

double honest_date0_integrand(double p1, double R1, const ModelParams& m) {
    const Date1Outcome o = combined::date1_behavior(p1, R1, m);
    const double repay_share = combined::repayment_share(o, m.pi0);
    return repay_share * R1 + (1.0 - repay_share) * p1 + m.beta * o.u1_honest;
}

double ceiling_below(double beta) { return std::nextafter(beta, 0.0); }

ModelParams combined_params(double beta, double pi0, double y, double p0) { return {beta, pi0, y, y, p0, 0.0}; }

}  // namespace

double ResidualReport::worst() const noexcept { return std::max({bayes, indifference, utility, bounds}); }

GridSpec validate_grid(const GridSpec& grid) {
    if (grid.price_points < 100) throw DomainError("price_points", "price_points: must be at least 100");
    if (grid.contract_points < 100) throw DomainError("contract_points", "contract_points: must be at least 100");
    if (!(grid.tolerance > 0.0)) throw DomainError("tolerance", "tolerance: must be positive");
    return grid;
}

ResidualReport grid_verify_date1(const ModelParams& params, double R1, const GridSpec& grid,
                                 const combined::Date1Perturbation& shift) {
    validate_grid(grid);
    const double beta = params.beta;
    const double pi0 = params.pi0;
    const double y = params.y();
    const double top = std::max(2.0 * params.p0, R1 + y);

    ResidualReport rep;
    rep.tolerance = grid.tolerance;
    rep.points = grid.price_points;
    for (std::size_t i = 0; i < grid.price_points; ++i) {
        const double p1 = top * static_cast<double>(i) / static_cast<double>(grid.price_points - 1);
        const Date1Outcome o = combined::date1_behavior(p1, R1, params, shift);
        ++rep.region_points[static_cast<std::size_t>(o.region)];

        try {
            rep.bayes = std::max(rep.bayes, std::abs(bayes_update(pi0, o.delta1) - o.pi1));
        } catch (const Indeterminate&) {
            // zero prior with certain default: the posterior is off the equilibrium path
        }

        const double gain = combined::strategic_repay_gain(o, p1, R1, beta, y);
        double slack = std::abs(gain);
        if (o.delta1 <= 0.0) slack = std::max(0.0, -gain);
        if (o.delta1 >= 1.0) slack = std::max(0.0, gain);
        rep.indifference = std::max(rep.indifference, slack);

        const double rebuilt = (1.0 + beta) * y - R1 + p1 + o.alpha * std::max((o.pi1 - beta) * y, 0.0);
        rep.utility = std::max(rep.utility, std::abs(o.u1_honest - rebuilt));

        double off = std::max({outside_unit(o.delta1), outside_unit(o.alpha), outside_unit(o.pi1)});
        // Posteriors live in {pi0} or [beta, 1].
        off = std::max(off, o.pi1 >= beta ? 0.0 : std::min(std::abs(o.pi1 - pi0), beta - o.pi1));
        // Lenders only randomise where the strategic type must be held indifferent.
        if (o.region != Date1Region::CreditRationing) off = std::max(off, std::abs(o.alpha - 1.0));
        rep.bounds = std::max(rep.bounds, off);
    }

    const double cuts[] = {0.0, combined::lower_threshold(R1, y), combined::rationing_threshold(R1, beta, y),
                           combined::upper_threshold(R1), top};
    for (std::size_t r = 0; r < 4; ++r) {
        const double width = std::clamp(cuts[r + 1], 0.0, top) - std::clamp(cuts[r], 0.0, top);
        if (width <= 0.0) {
            rep.notes.push_back(std::string(combined::to_string(static_cast<Date1Region>(r))) +
                                ": empty (zero-measure region on the price grid)");
        }
    }
    return rep;
}

double quadrature_u_keep(double R1, const ModelParams& params) {
    if (!(R1 >= 0.0)) throw DomainError("R1", "R1: must be non-negative");
    const double y = params.y();
    const double top = 2.0 * params.p0;
    const double cuts[] = {combined::lower_threshold(R1, y), combined::rationing_threshold(R1, params.beta, y),
                           combined::upper_threshold(R1)};
    auto f = [&](double p1) { return honest_date0_integrand(p1, R1, params); };
    return integrate_piecewise(f, cuts, 0.0, top) / top;
}

Optimum numeric_optimal_R1(const ModelParams& params, double step) {
    if (!(step > 0.0)) throw DomainError("step", "step: must be positive");
    const double top = 2.0 * params.y();
    const auto n = static_cast<std::size_t>(std::floor(top / step + 1e-9));
    Optimum best{0.0, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i <= n + 1; ++i) {
        const double R1 = std::min(static_cast<double>(i) * step, top);
        const double u = quadrature_u_keep(R1, params);
        if (u > best.u) best = {R1, u};
        if (R1 >= top) break;
    }
    return best;
}

Optimum numeric_optimal_R1(const ModelParams& params, const GridSpec& grid) {
    validate_grid(grid);
    return numeric_optimal_R1(params, 2.0 * params.y() / static_cast<double>(grid.contract_points - 1));
}

Optimum refined_optimal_R1(const ModelParams& params) {
    const double y = params.y();
    const double top = 2.0 * y;
    const double support = 2.0 * params.p0;
    std::vector<double> knots{0.0, top, y, params.beta * y, support, support + y, support + params.beta * y};
    std::erase_if(knots, [&](double k) { return k < 0.0 || k > top; });
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    auto u = [&](double R1) { return quadrature_u_keep(R1, params); };
    Optimum best{0.0, -std::numeric_limits<double>::infinity()};
    auto consider = [&](double R1, double v) {
        if (v > best.u) best = {R1, v};
    };
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i];
        const double b = knots[i + 1];
        if (b - a <= 0.0) continue;
        const double h = 0.5 * (b - a);
        const double mid = a + h;
        const double fa = u(a);
        const double fm = u(mid);
        const double fb = u(b);
        consider(a, fa);
        consider(mid, fm);
        consider(b, fb);
        const double curvature = (fa - 2.0 * fm + fb) / (2.0 * h * h);
        if (curvature < 0.0) {
            const double offset = -((fb - fa) / (2.0 * h)) / (2.0 * curvature);
            if (std::abs(offset) < h) consider(mid + offset, u(mid + offset));
        }
    }
    return best;
}

double keep_gap(const ModelParams& params) {
    return refined_optimal_R1(params).u - combined::sell_utility(params);
}

double oracle_pi0_star(double beta, double y, double p0) {
    auto gap = [&](double pi0) { return keep_gap(combined_params(beta, pi0, y, p0)); };
    if (gap(0.0) >= 0.0) return 0.0;
    double hi = ceiling_below(beta);
    if (gap(hi) < 0.0) return beta;
    double lo = 0.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) >= 0.0 ? hi : lo) = mid;
    }
    return hi;
}

KeepInterval oracle_keep_interval(double beta, double y, double scan_lo, double scan_hi, double step) {
    if (!(scan_lo > 0.0 && scan_hi > scan_lo && step > 0.0)) throw RangeError("keep interval scan: bad range");
    // Same outcome as oracle_pi0_star(...) < beta without the bisection.
    auto keeps = [&](double ratio) {
        return keep_gap(combined_params(beta, 0.0, y, ratio * y)) >= 0.0 ||
               keep_gap(combined_params(beta, ceiling_below(beta), y, ratio * y)) >= 0.0;
    };
    auto edge = [&](double out_ratio, double in_ratio) {
        for (int it = 0; it < 50; ++it) {
            const double mid = 0.5 * (out_ratio + in_ratio);
            (keeps(mid) ? in_ratio : out_ratio) = mid;
        }
        return 0.5 * (out_ratio + in_ratio);
    };

    const auto n = static_cast<std::size_t>(std::floor((scan_hi - scan_lo) / step + 1e-9));
    KeepInterval out;
    bool inside = false;
    bool closed = false;
    double prev = scan_lo;
    for (std::size_t i = 0; i <= n; ++i) {
        const double ratio = scan_lo + static_cast<double>(i) * step;
        const bool k = keeps(ratio);
        if (k && !inside) {
            if (closed) out.contiguous = false;
            if (out.empty) {
                out.empty = false;
                if (i == 0) {
                    out.lo = ratio;
                    out.open_at_scan_start = true;
                } else {
                    out.lo = edge(prev, ratio);
                }
            }
            inside = true;
        } else if (!k && inside) {
            out.hi = edge(ratio, prev);
            inside = false;
            closed = true;
        }
        prev = ratio;
    }
    if (inside) {
        out.hi = prev;
        out.open_at_scan_end = true;
    }
    return out;
}

Optimum collateral_date1_search(double p1, double x, double beta, double step) {
    const double top = 2.0 * p1 + x;
    const auto n = static_cast<std::size_t>(std::floor(top / step + 1e-9));
    Optimum best{0.0, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i <= n + 1; ++i) {
        const double R2 = std::min(static_cast<double>(i) * step, top);
        const double v = collateral::date1_contract_value(R2, p1, x, beta);
        if (v > best.u) best = {R2, v};
        if (R2 >= top) break;
    }
    return best;
}

double collateral_date0_value(double R1, double p0, double x, double beta) {
    const double top = 2.0 * p0;
    // Repay when the continuation beats losing the asset; lenders get R1 or the asset.
    auto f = [&](double p1) {
        const double cont = collateral::date1_keep_utility(p1, R1, x, beta);
        return cont >= 0.0 ? R1 + beta * cont : p1;
    };
    const double cuts[] = {collateral::date1_repayment_threshold(R1, x, beta), collateral::date1_switch_price(x, beta)};
    return integrate_piecewise(f, cuts, 0.0, top) / top;
}

Optimum collateral_date0_search(double p0, double x, double beta, double step) {
    const double top = 4.0 * p0 + 2.0 * x;
    const auto n = static_cast<std::size_t>(std::floor(top / step + 1e-9));
    Optimum best{0.0, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i <= n; ++i) {
        const double R1 = static_cast<double>(i) * step;
        const double v = collateral_date0_value(R1, p0, x, beta);
        if (v > best.u) best = {R1, v};
    }
    return best;
}

}  // namespace dce::oracle
