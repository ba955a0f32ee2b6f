#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dce/combined.hpp"
#include "dce/model.hpp"

// Brute-force counterparts of the closed forms: grids, exact piecewise quadrature
// and bisection, built only from the date-1 primitives.
namespace dce::oracle {

struct GridSpec {
    std::size_t price_points = 10000;
    std::size_t contract_points = 2001;
    double tolerance = 1e-9;

    bool operator==(const GridSpec&) const = default;
};

/// Throws DomainError if a count is below 100 or tolerance is not positive.
GridSpec validate_grid(const GridSpec& grid);

struct ResidualReport {
    double bayes = 0.0;         ///< |posterior - Bayes(prior, default prob)|
    double indifference = 0.0;  ///< violation of the strategic type's optimality
    double utility = 0.0;       ///< |honest utility - payoff rebuilt from the contract|
    double bounds = 0.0;        ///< probabilities outside [0, 1], posterior outside its set, stray rationing
    double tolerance = 1e-9;
    std::size_t points = 0;
    std::array<std::size_t, 4> region_points{};  ///< indexed by Date1Region
    std::vector<std::string> notes;

    double worst() const noexcept;
    bool passed() const noexcept { return worst() < tolerance; }

    bool operator==(const ResidualReport&) const = default;
};

/// Checks the date-1 system on an even price grid over [0, max(2 p0, R1 + y)].
ResidualReport grid_verify_date1(const ModelParams& params, double R1, const GridSpec& grid,
                                 const combined::Date1Perturbation& shift = {});

/// Honest date-0 utility of promising R1, integrating the date-1 outcome over
/// p1 ~ U[0, 2 p0] piece by piece, each piece clipped to the support.
double quadrature_u_keep(double R1, const ModelParams& params);

struct Optimum {
    double R1 = 0.0;
    double u = 0.0;

    bool operator==(const Optimum&) const = default;
};

/// Best R1 on an even grid over [0, 2y] (first grid point wins ties).
Optimum numeric_optimal_R1(const ModelParams& params, double step);
/// Grid with grid.contract_points points.
Optimum numeric_optimal_R1(const ModelParams& params, const GridSpec& grid);

/// Exact maximiser: the quadrature objective is quadratic between the R1 values where
/// a price cut crosses 0 or 2 p0, so each such segment is solved from three evaluations.
Optimum refined_optimal_R1(const ModelParams& params);

/// max over R1 of the quadrature objective minus the selling utility.
double keep_gap(const ModelParams& params);

/// Smallest pi0 in [0, beta] at which keeping beats selling; beta when it never does.
double oracle_pi0_star(double beta, double y, double p0);

struct KeepInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;
    bool contiguous = true;
    bool open_at_scan_start = false;  ///< keeping already wins at the first scanned ratio
    bool open_at_scan_end = false;

    bool operator==(const KeepInterval&) const = default;
};

/// Ratios p0 / y at which the oracle pi0* is below beta, scanned on [scan_lo, scan_hi]
/// with the given step and endpoints refined by bisection.
KeepInterval oracle_keep_interval(double beta, double y, double scan_lo = 0.01, double scan_hi = 5.0,
                                  double step = 0.01);

/// Collateral-only date-1 search: best R2 on a grid of the given step over [0, 2 p1 + x].
Optimum collateral_date1_search(double p1, double x, double beta, double step = 1e-4);

/// Collateral-only date-0 value of keeping the asset and promising R1, by quadrature.
double collateral_date0_value(double R1, double p0, double x, double beta);

/// Best collateral-only date-0 value over an R1 grid of the given step.
Optimum collateral_date0_search(double p0, double x, double beta, double step = 1e-3);

}  // namespace dce::oracle
