#include "dce/serialization.hpp"

#include <limits>
#include <string>

#include "dce/errors.hpp"

namespace dce {

namespace {

constexpr const char* kRegionKeys[] = {"CompleteSeparation", "PartialSeparation", "CreditRationing", "PoolingAutarky"};

json region_counts(const std::array<std::size_t, 4>& counts) {
    json j = json::object();
    for (std::size_t r = 0; r < 4; ++r) j[kRegionKeys[r]] = counts[r];
    return j;
}

std::array<std::size_t, 4> region_counts_from(const json& j) {
    std::array<std::size_t, 4> out{};
    for (std::size_t r = 0; r < 4; ++r) out[r] = j.at(kRegionKeys[r]).get<std::size_t>();
    return out;
}

}  // namespace

void from_json(const json& j, ModelParams& m) {
    if (!j.is_object()) throw DomainError("params", "params: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw DomainError(key, key + ": expected a number");
        const double v = value.get<double>();
        if (key == "beta") m.beta = v;
        else if (key == "pi0") m.pi0 = v;
        else if (key == "y") m.y1 = m.y2 = v;
        else if (key == "y1") m.y1 = v;
        else if (key == "y2") m.y2 = v;
        else if (key == "p0") m.p0 = v;
        else if (key == "x") m.x = v;
        else throw DomainError(key, key + ": unknown parameter");
    }
}

void to_json(json& j, const ModelParams& m) {
    j = {{"beta", m.beta}, {"pi0", m.pi0}, {"y1", m.y1}, {"y2", m.y2}, {"p0", m.p0}, {"x", m.x}};
}

void to_json(json& j, const Contract& c) { j = {{"b", c.b}, {"R", c.R}, {"kappa", c.collateral}}; }

void from_json(const json& j, Contract& c) {
    c.b = j.at("b").get<double>();
    c.R = j.at("R").get<double>();
    c.collateral = j.at("kappa").get<bool>();
}

namespace collateral {

void to_json(json& j, const CollateralDecision& d) {
    j = {{"action", d.action == Action::Sell ? "Sell" : "KeepAndBorrow"},
         {"contract", d.contract},
         {"threshold", d.threshold}};
}

void from_json(const json& j, CollateralDecision& d) {
    const auto action = j.at("action").get<std::string>();
    if (action == "Sell") d.action = Action::Sell;
    else if (action == "KeepAndBorrow") d.action = Action::KeepAndBorrow;
    else throw DomainError("action", "action: unknown label '" + action + "'");
    d.contract = j.at("contract").get<Contract>();
    d.threshold = j.at("threshold").get<double>();
}

void to_json(json& j, const Date1Contract& d) {
    j = {{"contract", d.contract},
         {"mode", d.mode == ContractMode::Safe ? "Safe" : "Risky"},
         {"switch_price", d.switch_price}};
}

}  // namespace collateral

namespace reputation {

void to_json(json& j, const ContractPlan& p) {
    j = {{"date0", p.date0}, {"date1", p.date1}, {"strategic_default_date1", p.strategic_default_date1}};
}

void from_json(const json& j, ContractPlan& p) {
    p.date0 = j.at("date0").get<Contract>();
    p.date1 = j.at("date1").get<Contract>();
    p.strategic_default_date1 = j.at("strategic_default_date1").get<double>();
}

void to_json(json& j, const RegionResult& r) {
    j = {{"region", to_string(r.region)},
         {"plan", r.plan},
         {"growth", r.growth},
         {"pooling_lower", r.pooling_lower},
         {"pooling_upper", r.pooling_upper},
         {"u_pool", r.u_pool},
         {"u_sep", r.u_sep}};
}

void from_json(const json& j, RegionResult& r) {
    r.region = region_from_string(j.at("region").get<std::string>());
    r.plan = j.at("plan").get<ContractPlan>();
    r.growth = j.at("growth").get<double>();
    r.pooling_lower = j.at("pooling_lower").get<double>();
    r.pooling_upper = j.at("pooling_upper").is_null() ? -std::numeric_limits<double>::infinity()
                                                      : j.at("pooling_upper").get<double>();
    r.u_pool = j.at("u_pool").get<double>();
    r.u_sep = j.at("u_sep").get<double>();
}

void to_json(json& j, const ClassResult& r) {
    json all = json::array();
    for (auto c : r.satisfied) all.push_back(to_string(c));
    j = {{"class", to_string(r.first)}, {"satisfied", all}, {"violation", r.violation}};
    j["strategic_default"] = r.strategic_default ? json(*r.strategic_default) : json(nullptr);
}

}  // namespace reputation

namespace combined {

void to_json(json& j, const Date1Outcome& o) {
    j = {{"region", to_string(o.region)},
         {"pi1", o.pi1},
         {"delta1", o.delta1},
         {"alpha", o.alpha},
         {"u1_honest", o.u1_honest}};
}

void from_json(const json& j, Date1Outcome& o) {
    o.region = date1_region_from_string(j.at("region").get<std::string>());
    o.pi1 = j.at("pi1").get<double>();
    o.delta1 = j.at("delta1").get<double>();
    o.alpha = j.at("alpha").get<double>();
    o.u1_honest = j.at("u1_honest").get<double>();
}

void to_json(json& j, const KeepContract& k) {
    j = {{"contract", k.contract}, {"verdict", to_string(k.verdict)}, {"u_keep", k.u_keep}, {"u_sell", k.u_sell}};
}

void to_json(json& j, const Date0Solution& s) {
    j = {{"R1_star", s.R1_star},
         {"R1_unconstrained", s.R1_unconstrained},
         {"b0", s.b0},
         {"binding", s.binding},
         {"u_keep", s.u_keep},
         {"u_sell", s.u_sell},
         {"decision", to_string(s.decision)},
         {"within_derivation_domain", s.within_derivation_domain}};
}

void from_json(const json& j, Date0Solution& s) {
    s.R1_star = j.at("R1_star").get<double>();
    s.R1_unconstrained = j.at("R1_unconstrained").get<double>();
    s.b0 = j.at("b0").get<double>();
    s.binding = j.at("binding").get<bool>();
    s.u_keep = j.at("u_keep").get<double>();
    s.u_sell = j.at("u_sell").get<double>();
    s.decision = verdict_from_string(j.at("decision").get<std::string>());
    s.within_derivation_domain = j.at("within_derivation_domain").get<bool>();
}

void to_json(json& j, const Pi0Bound& b) {
    j = {{"first_branch", b.first_branch},
         {"second_branch", b.second_branch},
         {"second_branch_corrected", b.second_branch_corrected},
         {"literal", b.literal},
         {"oracle", b.oracle},
         {"literal_disagrees", b.literal_disagrees},
         {"second_branch_disagrees", b.second_branch_disagrees},
         {"keep_interval", {b.interval_lo, b.interval_hi}}};
}

void from_json(const json& j, Pi0Bound& b) {
    b.first_branch = j.at("first_branch").get<double>();
    b.second_branch = j.at("second_branch").get<double>();
    b.second_branch_corrected = j.at("second_branch_corrected").get<double>();
    b.literal = j.at("literal").get<double>();
    b.oracle = j.at("oracle").get<double>();
    b.literal_disagrees = j.at("literal_disagrees").get<bool>();
    b.second_branch_disagrees = j.at("second_branch_disagrees").get<bool>();
    b.interval_lo = j.at("keep_interval").at(0).get<double>();
    b.interval_hi = j.at("keep_interval").at(1).get<double>();
}

}  // namespace combined

namespace oracle {

void to_json(json& j, const GridSpec& g) {
    j = {{"price_points", g.price_points}, {"contract_points", g.contract_points}, {"tolerance", g.tolerance}};
}

void from_json(const json& j, GridSpec& g) {
    if (j.contains("price_points")) g.price_points = j.at("price_points").get<std::size_t>();
    if (j.contains("contract_points")) g.contract_points = j.at("contract_points").get<std::size_t>();
    if (j.contains("tolerance")) g.tolerance = j.at("tolerance").get<double>();
}

void to_json(json& j, const ResidualReport& r) {
    j = {{"bayes", r.bayes},
         {"indifference", r.indifference},
         {"utility", r.utility},
         {"bounds", r.bounds},
         {"tolerance", r.tolerance},
         {"points", r.points},
         {"region_points", region_counts(r.region_points)},
         {"notes", r.notes},
         {"passed", r.passed()}};
}

void from_json(const json& j, ResidualReport& r) {
    r.bayes = j.at("bayes").get<double>();
    r.indifference = j.at("indifference").get<double>();
    r.utility = j.at("utility").get<double>();
    r.bounds = j.at("bounds").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.points = j.at("points").get<std::size_t>();
    r.region_points = region_counts_from(j.at("region_points"));
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json& j, const Optimum& o) { j = {{"R1", o.R1}, {"u", o.u}}; }

void from_json(const json& j, Optimum& o) {
    o.R1 = j.at("R1").get<double>();
    o.u = j.at("u").get<double>();
}

void to_json(json& j, const KeepInterval& k) {
    j = {{"lo", k.lo},
         {"hi", k.hi},
         {"empty", k.empty},
         {"contiguous", k.contiguous},
         {"open_at_scan_start", k.open_at_scan_start},
         {"open_at_scan_end", k.open_at_scan_end}};
}

void from_json(const json& j, KeepInterval& k) {
    k.lo = j.at("lo").get<double>();
    k.hi = j.at("hi").get<double>();
    k.empty = j.at("empty").get<bool>();
    k.contiguous = j.at("contiguous").get<bool>();
    k.open_at_scan_start = j.at("open_at_scan_start").get<bool>();
    k.open_at_scan_end = j.at("open_at_scan_end").get<bool>();
}

}  // namespace oracle

namespace sim {

void to_json(json& j, const SimStats& s) {
    j = {{"n_paths", s.n_paths},
         {"seed", s.seed},
         {"strategic_paths", s.strategic_paths},
         {"sell_rate_date0", s.sell_rate_date0},
         {"keep_rate_date0", s.keep_rate_date0},
         {"date1_default_rate", s.date1_default_rate},
         {"date1_default_se", s.date1_default_se},
         {"date2_default_rate", s.date2_default_rate},
         {"date2_default_se", s.date2_default_se},
         {"strategic_date1_default_rate", s.strategic_date1_default_rate},
         {"strategic_date1_default_se", s.strategic_date1_default_se},
         {"rationed_rate", s.rationed_rate},
         {"mean_posterior_after_repay", s.mean_posterior_after_repay},
         {"region_counts", region_counts(s.region_counts)}};
}

void from_json(const json& j, SimStats& s) {
    s.n_paths = j.at("n_paths").get<std::size_t>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.strategic_paths = j.at("strategic_paths").get<std::size_t>();
    s.sell_rate_date0 = j.at("sell_rate_date0").get<double>();
    s.keep_rate_date0 = j.at("keep_rate_date0").get<double>();
    s.date1_default_rate = j.at("date1_default_rate").get<double>();
    s.date1_default_se = j.at("date1_default_se").get<double>();
    s.date2_default_rate = j.at("date2_default_rate").get<double>();
    s.date2_default_se = j.at("date2_default_se").get<double>();
    s.strategic_date1_default_rate = j.at("strategic_date1_default_rate").get<double>();
    s.strategic_date1_default_se = j.at("strategic_date1_default_se").get<double>();
    s.rationed_rate = j.at("rationed_rate").get<double>();
    s.mean_posterior_after_repay = j.at("mean_posterior_after_repay").get<double>();
    s.region_counts = region_counts_from(j.at("region_counts"));
}

void to_json(json& j, const TypeMasses& m) {
    j = {{"sold", m.sold},           {"borrowing", m.borrowing},   {"defaulted", m.defaulted},
         {"repaid", m.repaid},       {"refinanced", m.refinanced}, {"rationed", m.rationed},
         {"late_default", m.late_default}, {"settled", m.settled}};
}

void from_json(const json& j, TypeMasses& m) {
    m.sold = j.at("sold").get<double>();
    m.borrowing = j.at("borrowing").get<double>();
    m.defaulted = j.at("defaulted").get<double>();
    m.repaid = j.at("repaid").get<double>();
    m.refinanced = j.at("refinanced").get<double>();
    m.rationed = j.at("rationed").get<double>();
    m.late_default = j.at("late_default").get<double>();
    m.settled = j.at("settled").get<double>();
}

void to_json(json& j, const Cohort& c) {
    j = {{"born", c.born},
         {"R1", c.R1},
         {"decision", combined::to_string(c.decision)},
         {"honest", c.honest},
         {"strategic", c.strategic}};
}

void from_json(const json& j, Cohort& c) {
    c.born = j.at("born").get<int>();
    c.R1 = j.at("R1").get<double>();
    c.decision = combined::verdict_from_string(j.at("decision").get<std::string>());
    c.honest = j.at("honest").get<TypeMasses>();
    c.strategic = j.at("strategic").get<TypeMasses>();
}

void to_json(json& j, const OlgPeriod& p) {
    j = {{"date", p.date},
         {"price", p.price},
         {"young_keep", p.young_keep},
         {"young_sell", p.young_sell},
         {"middle_default", p.middle_default},
         {"middle_strategic_default", p.middle_strategic_default},
         {"middle_strategic_borrowers", p.middle_strategic_borrowers},
         {"middle_repay", p.middle_repay},
         {"middle_refinanced", p.middle_refinanced},
         {"middle_rationed", p.middle_rationed},
         {"old_default", p.old_default},
         {"old_repay", p.old_repay},
         {"mass_error", p.mass_error},
         {"cohorts", p.cohorts}};
    j["middle_region"] = p.middle_region ? json(combined::to_string(*p.middle_region)) : json(nullptr);
}

void from_json(const json& j, OlgPeriod& p) {
    p.date = j.at("date").get<int>();
    p.price = j.at("price").get<double>();
    p.young_keep = j.at("young_keep").get<double>();
    p.young_sell = j.at("young_sell").get<double>();
    const json& region = j.at("middle_region");
    p.middle_region = region.is_null() ? std::nullopt
                                       : std::optional(combined::date1_region_from_string(region.get<std::string>()));
    p.middle_default = j.at("middle_default").get<double>();
    p.middle_strategic_default = j.at("middle_strategic_default").get<double>();
    p.middle_strategic_borrowers = j.at("middle_strategic_borrowers").get<double>();
    p.middle_repay = j.at("middle_repay").get<double>();
    p.middle_refinanced = j.at("middle_refinanced").get<double>();
    p.middle_rationed = j.at("middle_rationed").get<double>();
    p.old_default = j.at("old_default").get<double>();
    p.old_repay = j.at("old_repay").get<double>();
    p.mass_error = j.at("mass_error").get<double>();
    p.cohorts = j.at("cohorts").get<std::vector<Cohort>>();
}

void to_json(json& j, const OlgResult& r) {
    j = {{"seed", r.seed}, {"prices", r.prices}, {"periods", r.periods}, {"max_mass_error", r.max_mass_error}};
}

void from_json(const json& j, OlgResult& r) {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.prices = j.at("prices").get<std::vector<double>>();
    r.periods = j.at("periods").get<std::vector<OlgPeriod>>();
    r.max_mass_error = j.at("max_mass_error").get<double>();
}

void to_json(json& j, const EquilibriumSummary& s) {
    j = {{"price", s.price},
         {"R1", s.R1},
         {"R1_optimised", s.R1_optimised},
         {"date1", s.date1},
         {"u_keep", s.u_keep},
         {"u_sell", s.u_sell},
         {"decision", combined::to_string(s.decision)}};
}

void from_json(const json& j, EquilibriumSummary& s) {
    s.price = j.at("price").get<double>();
    s.R1 = j.at("R1").get<double>();
    s.R1_optimised = j.at("R1_optimised").get<bool>();
    s.date1 = j.at("date1").get<combined::Date1Outcome>();
    s.u_keep = j.at("u_keep").get<double>();
    s.u_sell = j.at("u_sell").get<double>();
    s.decision = combined::verdict_from_string(j.at("decision").get<std::string>());
}

}  // namespace sim

}  // namespace dce
