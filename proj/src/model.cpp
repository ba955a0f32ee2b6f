#include "dce/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "dce/errors.hpp"

namespace dce {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void require(bool ok, const char* field, const std::string& msg) {
    if (!ok) throw DomainError(field, std::string(field) + ": " + msg);
}

}  // namespace

ModelParams validate_params(const ModelParams& raw) {
    require(std::isfinite(raw.beta) && raw.beta > 0.0 && raw.beta < 1.0, "beta", "must lie in (0, 1)");
    require(std::isfinite(raw.pi0) && raw.pi0 >= 0.0 && raw.pi0 <= 1.0, "pi0", "must lie in [0, 1]");
    require(std::isfinite(raw.y1) && raw.y1 >= 0.0, "y1", "must be non-negative");
    require(std::isfinite(raw.y2) && raw.y2 >= 0.0, "y2", "must be non-negative");
    require(std::isfinite(raw.p0) && raw.p0 > 0.0, "p0", "must be positive");
    require(std::isfinite(raw.x) && raw.x >= 0.0, "x", "must be non-negative");
    return raw;
}

double consumption(double y, double R, const BorrowerState& state, double p, double x, double b) {
    if (state.defaulted != 0) return y;
    const double c = y + (x + p * state.sells) * state.holds_asset - R + state.alpha * b;
    if (c < 0.0) throw NegativeConsumption(c);
    return c;
}

double lifetime_utility(std::span<const double> c, double beta) {
    double total = 0.0;
    double discount = 1.0;
    for (double ct : c) {
        total += discount * ct;
        discount *= beta;
    }
    return total;
}

double bayes_update(double pi_prev, double delta) {
    const double denom = pi_prev + (1.0 - pi_prev) * (1.0 - delta);
    if (denom == 0.0) throw Indeterminate("posterior undefined: zero prior and certain default");
    return pi_prev / denom;
}

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t index) const noexcept {
    std::uint64_t h = splitmix64(seed_);
    h = splitmix64(h ^ (stream * 0xD1B54A32D192ED03ULL));
    h = splitmix64(h ^ (index * 0xABC98388FB8FAC03ULL));
    return h;
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t index) const noexcept {
    return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
}

PricePath sample_price_path(double p0, int dates, std::uint64_t seed, std::uint64_t path) {
    if (!(p0 > 0.0)) throw DomainError("p0", "p0: must be positive");
    const CounterRng rng(seed);
    PricePath out;
    out.p.reserve(static_cast<std::size_t>(std::max(dates, 0)) + 1);
    out.p.push_back(p0);
    for (int t = 0; t < dates; ++t) {
        out.p.push_back(2.0 * out.p.back() * rng.uniform(path, static_cast<std::uint64_t>(t)));
    }
    return out;
}

double integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    std::vector<double> cuts{lo, hi};
    for (double c : breakpoints) {
        if (c > lo && c < hi) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) {
            total += boost::math::quadrature::gauss<double, 7>::integrate(f, cuts[i], cuts[i + 1]);
        }
    }
    return total;
}

}  // namespace dce
