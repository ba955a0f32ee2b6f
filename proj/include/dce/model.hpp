#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dce {

/// Model primitives shared by every regime.
///
/// `x` is the per-period non-pledgeable dividend; it is zero everywhere except
/// the dividend-asset benchmark.
struct ModelParams {
    double beta = 0.5;  ///< discount factor, in (0, 1)
    double pi0 = 0.0;   ///< lenders' prior that the borrower is honest
    double y1 = 1.0;    ///< date-1 non-financial income
    double y2 = 1.0;    ///< date-2 non-financial income
    double p0 = 1.0;    ///< initial asset price
    double x = 0.0;     ///< non-pledgeable dividend

    /// Common income when y1 == y2 (combined regime).
    double y() const noexcept { return y1; }

    bool operator==(const ModelParams&) const = default;
};

/// A loan offer: borrow `b` today, repay `R` next date, `collateral` pledges the asset.
struct Contract {
    double b = 0.0;
    double R = 0.0;
    bool collateral = false;

    static Contract autarky() noexcept { return {}; }
    bool operator==(const Contract&) const = default;
};

/// Binary decisions of the budget identity plus the lender's acceptance probability.
struct BorrowerState {
    int defaulted = 0;  ///< d
    int holds_asset = 0;  ///< a
    int sells = 0;  ///< s, at most a
    double alpha = 1.0;
};

struct PricePath {
    std::vector<double> p;  ///< p[0] = p0, p[t+1] ~ U[0, 2 p[t]]
};

/// Throws DomainError naming the first violated invariant; returns `raw` unchanged otherwise.
ModelParams validate_params(const ModelParams& raw);

/// Date-t consumption from the budget identity. Throws NegativeConsumption when c < 0.
double consumption(double y, double R, const BorrowerState& state, double p, double x, double b);

/// Discounted sum of a consumption stream with linear period utility.
double lifetime_utility(std::span<const double> c, double beta);

/// Lenders' posterior after observing repayment, given the strategic type defaults
/// with probability `delta`. Throws Indeterminate when pi_prev == 0 and delta == 1.
double bayes_update(double pi_prev, double delta);

/// Counter-based uniform generator: every draw is a pure function of
/// (seed, stream, index), so results do not depend on evaluation order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const noexcept;

    /// Uniform on [0, 1).
    double uniform(std::uint64_t stream, std::uint64_t index) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

/// Draws p[t+1] ~ U[0, 2 p[t]] for `dates` steps. `path` selects an independent stream.
PricePath sample_price_path(double p0, int dates, std::uint64_t seed, std::uint64_t path = 0);

/// Integral of `f` over [lo, hi] split at `breakpoints` (clipped to the interval).
/// Gauss-Legendre nodes are interior, so values exactly at a breakpoint are never
/// sampled and each piece is integrated exactly when it is a polynomial of degree <= 13.
double integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double lo, double hi);

}  // namespace dce
