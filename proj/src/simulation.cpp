#include "dce/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "dce/errors.hpp"

namespace dce::sim {

namespace {

using combined::Date1Outcome;
using combined::Date1Region;
using combined::Verdict;

constexpr std::size_t kChunk = 4096;

enum Draw : std::uint64_t { TypeDraw = 0, PriceDraw = 1, DefaultDraw = 2, AcceptDraw = 3 };

struct ChunkTotals {
    std::size_t strategic = 0;
    std::size_t date1_defaults = 0;
    std::size_t strategic_date1_defaults = 0;
    std::size_t date2_defaults = 0;
    std::size_t repayers = 0;
    std::size_t applicants = 0;
    std::size_t rationed = 0;
    double posterior_sum = 0.0;
    std::array<std::size_t, 4> regions{};
};

ChunkTotals run_chunk(const ModelParams& params, double R1, double honest_share, const CounterRng& rng,
                      std::size_t first, std::size_t last) {
    ChunkTotals t;
    for (std::size_t i = first; i < last; ++i) {
        const bool honest = rng.uniform(i, TypeDraw) < honest_share;
        const double p1 = 2.0 * params.p0 * rng.uniform(i, PriceDraw);
        const Date1Outcome o = combined::date1_behavior(p1, R1, params);
        ++t.regions[static_cast<std::size_t>(o.region)];
        if (!honest) ++t.strategic;

        if (!honest && rng.uniform(i, DefaultDraw) < o.delta1) {
            ++t.date1_defaults;
            ++t.strategic_date1_defaults;
            continue;
        }
        ++t.repayers;
        t.posterior_sum += o.pi1;
        if (o.pi1 < params.beta) continue;  // no unsecured credit at this reputation
        ++t.applicants;
        if (rng.uniform(i, AcceptDraw) >= o.alpha) {
            ++t.rationed;
            continue;
        }
        if (!honest) ++t.date2_defaults;
    }
    return t;
}

double binomial_se(double rate, std::size_t n) {
    return n > 0 ? std::sqrt(rate * (1.0 - rate) / static_cast<double>(n)) : 0.0;
}

double ratio(std::size_t num, std::size_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

}  // namespace

SimStats monte_carlo(const ModelParams& params, double R1, std::size_t n, std::uint64_t seed,
                     const MonteCarloOptions& options) {
    const Verdict decision = combined::date0_decision(params).decision;
    const double honest_share = options.honest_share.value_or(params.pi0);
    if (!(honest_share >= 0.0 && honest_share <= 1.0)) {
        throw DomainError("honest_share", "honest_share: must lie in [0, 1]");
    }
    const CounterRng rng(seed);

    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkTotals> slots(chunks);
    std::size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(chunks, 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
            slots[c] = run_chunk(params, R1, honest_share, rng, c * kChunk, std::min(n, (c + 1) * kChunk));
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }

    ChunkTotals sum;
    for (const ChunkTotals& t : slots) {
        sum.strategic += t.strategic;
        sum.date1_defaults += t.date1_defaults;
        sum.strategic_date1_defaults += t.strategic_date1_defaults;
        sum.date2_defaults += t.date2_defaults;
        sum.repayers += t.repayers;
        sum.applicants += t.applicants;
        sum.rationed += t.rationed;
        sum.posterior_sum += t.posterior_sum;
        for (std::size_t r = 0; r < 4; ++r) sum.regions[r] += t.regions[r];
    }

    SimStats s;
    s.n_paths = n;
    s.seed = seed;
    s.strategic_paths = sum.strategic;
    s.keep_rate_date0 = decision == Verdict::Keep ? 1.0 : 0.0;
    s.sell_rate_date0 = 1.0 - s.keep_rate_date0;
    s.date1_default_rate = ratio(sum.date1_defaults, n);
    s.date1_default_se = binomial_se(s.date1_default_rate, n);
    s.date2_default_rate = ratio(sum.date2_defaults, n);
    s.date2_default_se = binomial_se(s.date2_default_rate, n);
    s.strategic_date1_default_rate = ratio(sum.strategic_date1_defaults, sum.strategic);
    s.strategic_date1_default_se = binomial_se(s.strategic_date1_default_rate, sum.strategic);
    s.rationed_rate = ratio(sum.rationed, sum.repayers);
    s.mean_posterior_after_repay = sum.repayers > 0 ? sum.posterior_sum / static_cast<double>(sum.repayers) : 0.0;
    s.region_counts = sum.regions;
    return s;
}

namespace {

void enter(Cohort& c, const ModelParams& params, double price) {
    c.honest = {};
    c.strategic = {};
    const double honest = params.pi0;
    const double strategic = 1.0 - params.pi0;
    if (price > 0.0) {
        ModelParams at_birth = params;
        at_birth.p0 = price;
        const combined::Date0Solution s = combined::date0_decision(at_birth);
        c.decision = s.decision;
        c.R1 = s.R1_star;
    } else {
        c.decision = Verdict::Sell;
    }
    if (c.decision == Verdict::Keep) {
        c.honest.borrowing = honest;
        c.strategic.borrowing = strategic;
    } else {
        c.honest.sold = honest;
        c.strategic.sold = strategic;
    }
}

// Date-1 stage: settle the date-0 loan and ask for a new one.
void mature(Cohort& c, const ModelParams& params, double price, OlgPeriod& out) {
    if (c.decision != Verdict::Keep) return;
    const Date1Outcome o = combined::date1_behavior(std::max(price, 0.0), c.R1, params);
    out.middle_region = o.region;
    out.middle_strategic_borrowers = c.strategic.borrowing;

    auto settle = [&](TypeMasses& m, double default_prob) {
        const double owed = m.borrowing;
        m.borrowing = 0.0;
        m.defaulted = default_prob * owed;
        const double repaid = owed - m.defaulted;
        if (o.pi1 >= params.beta) {
            m.refinanced = o.alpha * repaid;
            m.rationed = repaid - m.refinanced;
        } else {
            m.repaid = repaid;
        }
    };
    settle(c.honest, 0.0);
    settle(c.strategic, o.delta1);

    out.middle_strategic_default = c.strategic.defaulted;
    out.middle_default = c.honest.defaulted + c.strategic.defaulted;
    out.middle_repay = c.honest.repaid + c.honest.refinanced + c.honest.rationed + c.strategic.repaid +
                       c.strategic.refinanced + c.strategic.rationed;
    out.middle_refinanced = c.honest.refinanced + c.strategic.refinanced;
    out.middle_rationed = c.honest.rationed + c.strategic.rationed;
}

// Date-2 stage: the last loan is repaid by the honest type only.
void retire(Cohort& c, OlgPeriod& out) {
    c.honest.settled = c.honest.refinanced;
    c.honest.refinanced = 0.0;
    c.strategic.late_default = c.strategic.refinanced;
    c.strategic.refinanced = 0.0;
    out.old_default = c.strategic.late_default;
    out.old_repay = c.honest.settled;
}

}  // namespace

OlgResult olg_simulate(const ModelParams& params, std::span<const double> prices) {
    combined::date1_behavior(0.0, 0.0, params);  // regime checks
    if (prices.size() < 3) throw DomainError("periods", "periods: at least 3 dates are needed");

    OlgResult res;
    res.prices.assign(prices.begin(), prices.end());
    std::vector<Cohort> living;  // youngest first
    for (std::size_t t = 0; t < prices.size(); ++t) {
        OlgPeriod out;
        out.date = static_cast<int>(t);
        out.price = prices[t];

        if (living.size() == 3) living.pop_back();
        Cohort young;
        young.born = out.date;
        enter(young, params, prices[t]);
        living.insert(living.begin(), young);
        out.young_keep = young.decision == Verdict::Keep ? 1.0 : 0.0;
        out.young_sell = 1.0 - out.young_keep;
        if (living.size() >= 2) mature(living[1], params, prices[t], out);
        if (living.size() >= 3) retire(living[2], out);

        for (const Cohort& c : living) {
            out.mass_error = std::max({out.mass_error, std::abs(c.honest.total() - params.pi0),
                                       std::abs(c.strategic.total() - (1.0 - params.pi0))});
        }
        out.cohorts = living;
        res.max_mass_error = std::max(res.max_mass_error, out.mass_error);
        res.periods.push_back(std::move(out));
    }
    return res;
}

OlgResult olg_simulate(const ModelParams& params, int periods, std::uint64_t seed) {
    if (periods < 3) throw DomainError("periods", "periods: at least 3 dates are needed");
    const PricePath path = sample_price_path(params.p0, periods - 1, seed);
    OlgResult res = olg_simulate(params, path.p);
    res.seed = seed;
    return res;
}

EquilibriumSummary constant_price_solve(const ModelParams& params, double p, std::optional<double> R1) {
    if (!(p >= 0.0)) throw DomainError("p", "p: must be non-negative");
    const double y = params.y();
    const double beta = params.beta;
    // With a point-mass price the date-0 objective is the integrand at p itself.
    auto value = [&](double r) {
        const Date1Outcome o = combined::date1_behavior(p, r, params);
        const double repay_share = combined::repayment_share(o, params.pi0);
        return repay_share * r + (1.0 - repay_share) * p + beta * o.u1_honest;
    };

    EquilibriumSummary s;
    s.price = p;
    if (R1) {
        if (!(*R1 >= 0.0 && *R1 <= 2.0 * y)) throw DomainError("R1", "R1: must lie in [0, 2y]");
        s.R1 = *R1;
    } else {
        // The objective is continuous and linear in R1 between these cuts.
        s.R1_optimised = true;
        double best = -1.0;
        bool first = true;
        for (double r : {0.0, p, p + beta * y, p + y, 2.0 * y}) {
            if (r < 0.0 || r > 2.0 * y) continue;
            const double v = value(r);
            if (first || v > best) {
                best = v;
                s.R1 = r;
                first = false;
            }
        }
    }
    s.date1 = combined::date1_behavior(p, s.R1, params);
    s.u_keep = value(s.R1);
    s.u_sell = beta * (1.0 + beta) * y + p;
    s.decision = s.u_keep >= s.u_sell ? Verdict::Keep : Verdict::Sell;
    return s;
}

}  // namespace dce::sim
