#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dce/collateral.hpp"
#include "dce/combined.hpp"
#include "dce/csv.hpp"
#include "dce/errors.hpp"
#include "dce/reputation.hpp"
#include "dce/serialization.hpp"
#include "dce/simulation.hpp"

namespace dce::cli {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double y_of(const RunConfig& cfg) { return cfg.params.y1; }

json plan_pairs(const reputation::ContractPlan& p) {
    return json::array({json::array({p.date0.b, p.date0.R}), json::array({p.date1.b, p.date1.R})});
}

double R1_or_optimal(const RunConfig& cfg) {
    return cfg.R1 ? *cfg.R1 : combined::optimal_R1(cfg.params).R1_star;
}

json solve(const RunConfig& cfg) {
    const ModelParams& m = cfg.params;
    if (cfg.regime == "collateral") {
        json j = {{"regime", "collateral"}, {"decision", collateral::date0_decision(m.p0, m.x, m.beta)}};
        if (cfg.p1) j["date1"] = collateral::date1_optimal_contract(*cfg.p1, m.x, m.beta);
        return j;
    }
    if (cfg.regime == "reputation") {
        json j = reputation::classify_region(m.pi0, m.beta, m.y1, m.y2);
        j["regime"] = "reputation";
        return j;
    }
    if (cfg.regime == "combined") {
        if (!cfg.R1) {
            json j = combined::date0_decision(m);
            j["regime"] = "combined";
            return j;
        }
        const combined::Date0Objective obj = combined::date0_objective(*cfg.R1, m);
        return {{"regime", "combined"},
                {"R1", *cfg.R1},
                {"u_keep", obj.u_keep},
                {"u_keep_quadrature", oracle::quadrature_u_keep(*cfg.R1, m)},
                {"b0", obj.b0},
                {"within_derivation_domain", obj.within_derivation_domain},
                {"u_sell", combined::sell_utility(m)}};
    }
    if (cfg.regime == "constant") {
        json j = sim::constant_price_solve(m, cfg.price.value_or(m.p0), cfg.R1);
        j["regime"] = "constant";
        return j;
    }
    throw DomainError("regime", "regime: expected collateral, reputation, combined or constant");
}

json classify(const RunConfig& cfg) {
    const ModelParams& m = cfg.params;
    if (cfg.regime == "reputation") {
        const auto r = reputation::classify_region(m.pi0, m.beta, m.y1, m.y2);
        json j = {{"region", reputation::to_string(r.region)},
                  {"plan", plan_pairs(r.plan)},
                  {"strategic_default_date1", r.plan.strategic_default_date1},
                  {"growth", r.growth},
                  {"u_pool", r.u_pool},
                  {"u_sep", r.u_sep}};
        if (!cfg.plan.empty()) {
            if (cfg.plan.size() != 4) throw DomainError("plan", "plan: expected b0,R1,b1,R2");
            const reputation::ContractPlan p{{cfg.plan[0], cfg.plan[1], false}, {cfg.plan[2], cfg.plan[3], false}, 0.0};
            j["equilibrium_class"] = reputation::classify_plan(p, m.pi0, m.beta, m.y1, m.y2);
        }
        return j;
    }
    if (cfg.regime == "combined") {
        const double R1 = R1_or_optimal(cfg);
        json j = combined::date1_behavior(cfg.p1.value_or(m.p0), R1, m);
        j["R1"] = R1;
        j["p1"] = cfg.p1.value_or(m.p0);
        return j;
    }
    if (cfg.regime == "collateral") {
        return collateral::date1_optimal_contract(cfg.p1.value_or(m.p0), m.x, m.beta);
    }
    if (cfg.regime == "constant") {
        return sim::constant_price_solve(m, cfg.price.value_or(m.p0), cfg.R1).date1;
    }
    throw DomainError("regime", "regime: expected collateral, reputation, combined or constant");
}

json thresholds(const RunConfig& cfg) {
    const ModelParams& m = cfg.params;
    if (cfg.regime == "combined" || cfg.regime == "constant") {
        const double R1 = R1_or_optimal(cfg);
        return {{"R1", R1},
                {"lower", combined::lower_threshold(R1, y_of(cfg))},
                {"rationing", combined::rationing_threshold(R1, m.beta, y_of(cfg))},
                {"upper", combined::upper_threshold(R1)}};
    }
    if (cfg.regime == "collateral") {
        json j = {{"p0_hat", collateral::date0_sell_threshold(m.x, m.beta)},
                  {"p1_switch", collateral::date1_switch_price(m.x, m.beta)}};
        if (cfg.R1) j["p1_hat"] = collateral::date1_repayment_threshold(*cfg.R1, m.x, m.beta);
        if (cfg.R2) j["p2_hat"] = collateral::date2_default_threshold(*cfg.R2, m.x);
        return j;
    }
    if (cfg.regime == "reputation") {
        const auto r = reputation::classify_region(m.pi0, m.beta, m.y1, m.y2);
        return {{"max_riskless_loan", reputation::max_riskless_loan(m.pi0, m.beta, m.y2)},
                {"pooling_lower", r.pooling_lower},
                {"pooling_upper", r.pooling_upper}};
    }
    throw DomainError("regime", "regime: expected collateral, reputation, combined or constant");
}

json simulate(const RunConfig& cfg) {
    sim::MonteCarloOptions opt;
    opt.threads = cfg.threads;
    opt.honest_share = cfg.honest_share;
    return sim::monte_carlo(cfg.params, R1_or_optimal(cfg), cfg.paths, cfg.seed, opt);
}

struct CheckRow {
    std::string name;
    double expected;
    double actual;
    double tolerance;
};

json verify(const RunConfig& cfg, bool& ok) {
    using combined::Date1Region;
    std::vector<CheckRow> rows;
    auto add = [&](std::string name, double expected, double actual, double tol) {
        rows.push_back({std::move(name), expected, actual, tol});
    };

    add("consumption budget identity", 3.2, consumption(1, 0.5, {0, 1, 1, 1.0}, 2, 0, 0.7), 1e-12);
    const double stream[] = {1, 1, 1};
    add("lifetime utility", 1.75, lifetime_utility(stream, 0.5), 1e-12);

    add("collateral date-2 threshold", 2.0, collateral::date2_default_threshold(3, 1), 1e-12);
    const auto risky = collateral::date1_optimal_contract(2, 1, 0.5).contract;
    add("collateral risky loan", 2.0, risky.b, 1e-12);
    add("collateral risky repayment", 3.0, risky.R, 1e-12);
    add("collateral repayment threshold at the cut", 1.0, collateral::date1_repayment_threshold(2.5, 1, 0.5), 1e-12);
    const double p1_hat = collateral::date1_repayment_threshold(4, 1, 0.5);
    add("collateral repayment threshold upper branch", 2.822876, p1_hat, 1e-6);
    add("collateral keep utility at threshold", 0.0, collateral::date1_keep_utility(p1_hat, 4, 1, 0.5), 1e-9);
    add("collateral date-0 threshold", 8.0 / 3.0, collateral::date0_sell_threshold(1, 0.5), 1e-12);
    add("collateral equivalent repayment", 7.083333, collateral::date0_decision(3, 1, 0.5).contract.R, 1e-6);

    add("riskless loan cap", 6.0, reputation::max_riskless_loan(0.8, 0.5, 10), 1e-12);
    const auto pool = reputation::classify_region(0.6, 0.5, 5, 10);
    add("pooling label", 1.0, pool.region == reputation::Region::Pooling ? 1.0 : 0.0, 0.0);
    add("pooling utility", 1.5, pool.u_pool, 1e-12);
    add("separating utility", 1.2, pool.u_sep, 1e-12);
    const auto sep = reputation::classify_region(0.8, 0.5, 5, 10);
    add("separating label", 1.0, sep.region == reputation::Region::Separating ? 1.0 : 0.0, 0.0);
    add("mixed default probability", 1.0 / 3.0, reputation::mixed_default_prob(2, 4, 0.4), 1e-12);

    const ModelParams d1{0.5, 0.2, 1, 1, 1.2, 0};
    const auto partial = combined::date1_behavior(0.8, 1.5, d1);
    add("partial separation posterior", 0.7, partial.pi1, 1e-12);
    add("partial separation Bayes", partial.pi1, bayes_update(0.2, partial.delta1), 1e-9);
    const auto rationing = combined::date1_behavior(1.2, 1.5, d1);
    add("rationing acceptance", 0.6, rationing.alpha, 1e-12);
    add("rationing indifference", 0.0, combined::strategic_repay_gain(rationing, 1.2, 1.5, 0.5, 1), 1e-9);

    const ModelParams anchor{0.5, 0.3, 1, 1, 1.2, 0};
    add("closed-form date-0 utility", 1.928125, combined::closed_form_u_keep(2, anchor), 1e-9);
    add("quadrature date-0 utility", 1.928125, oracle::quadrature_u_keep(2, anchor), 1e-9);
    add("optimal repayment", 2.0, combined::optimal_R1(anchor).R1_star, 1e-12);
    add("grid optimal repayment", 2.0, oracle::numeric_optimal_R1(anchor, 1e-3).R1, 1e-3);
    const ModelParams keeper{0.5, 0.4, 1, 1, 1.2, 0};
    add("keep utility", 2.021875, combined::date0_decision(keeper).u_keep, 1e-9);
    add("oracle pi0 bound", 0.323333, oracle::oracle_pi0_star(0.5, 1, 1.2), 1e-4);

    const oracle::ResidualReport residuals = oracle::grid_verify_date1(d1, 1.5, cfg.grid);

    ok = residuals.passed();
    json checks = json::array();
    for (const CheckRow& r : rows) {
        const bool pass = std::abs(r.actual - r.expected) <= r.tolerance;
        ok = ok && pass;
        checks.push_back({{"name", r.name},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"tolerance", r.tolerance},
                          {"passed", pass}});
    }
    return {{"checks", checks}, {"residuals", residuals}, {"passed", ok}};
}

void set_axis(RunConfig& cfg, const std::string& axis, double v) {
    if (axis == "beta") cfg.params.beta = v;
    else if (axis == "pi0") cfg.params.pi0 = v;
    else if (axis == "y") cfg.params.y1 = cfg.params.y2 = v;
    else if (axis == "p0") cfg.params.p0 = v;
    else if (axis == "x") cfg.params.x = v;
    else if (axis == "R1") cfg.R1 = v;
    else throw DomainError("axis", "axis: expected beta, pi0, y, p0, x or R1");
}

std::string cell_text(const json& v) {
    if (v.is_number_float()) return csv::format_number(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    if (v.is_string()) return csv::escape(v.get<std::string>());
    return csv::escape(v.dump());
}

void write_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv::escape(header[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

void write_json_as_csv(std::ostream& os, const json& j) {
    std::vector<std::string> keys;
    std::vector<json> values;
    flatten(j, "", keys, values);
    write_table(os, keys, {values});
}

void sweep(const RunConfig& cfg, std::ostream& os) {
    const std::vector<double> xs = sweep_points(cfg.range);
    std::vector<std::string> header{cfg.axis};
    std::vector<std::vector<json>> rows;
    for (double v : xs) {
        RunConfig at = cfg;
        at.command = cfg.target;
        set_axis(at, cfg.axis, v);
        validate_params(at.params);
        std::vector<std::string> keys;
        std::vector<json> values;
        flatten(evaluate(at), "", keys, values);
        if (rows.empty()) header.insert(header.end(), keys.begin(), keys.end());
        std::map<std::string, json> by_key;
        for (std::size_t i = 0; i < keys.size(); ++i) by_key[keys[i]] = values[i];
        std::vector<json> row{v};
        for (std::size_t c = 1; c < header.size(); ++c) {
            auto it = by_key.find(header[c]);
            row.push_back(it == by_key.end() ? json(nullptr) : it->second);
        }
        rows.push_back(std::move(row));
    }
    write_table(os, header, rows);
}

void figures(const RunConfig& cfg, std::ostream& os) {
    if (cfg.points < 2) throw DomainError("points", "points: need at least 2");
    const auto n = static_cast<double>(cfg.points);
    if (cfg.which == "fig2") {
        csv::Writer w(os, {"beta", "pi0", "g", "label"});
        for (std::size_t i = 0; i < cfg.points; ++i) {
            const double beta = (static_cast<double>(i) + 0.5) / n;
            for (std::size_t k = 0; k < cfg.points; ++k) {
                const double pi0 = static_cast<double>(k) / (n - 1.0);
                const auto r = reputation::classify_region(pi0, beta, 1.0, 1.0 + cfg.growth);
                w.row({beta, pi0, cfg.growth, std::string(reputation::to_string(r.region))});
            }
        }
    } else if (cfg.which == "fig2-boundaries") {
        csv::Writer w(os, {"beta", "g", "pooling_lower", "pooling_upper"});
        for (std::size_t i = 0; i < cfg.points; ++i) {
            const double beta = (static_cast<double>(i) + 0.5) / n;
            const auto r = reputation::classify_region(beta, beta, 1.0, 1.0 + cfg.growth);
            w.row({beta, cfg.growth, r.pooling_lower, r.pooling_upper});
        }
    } else if (cfg.which == "fig3") {
        const double R1 = R1_or_optimal(cfg);
        const double top = std::max(2.0 * cfg.params.p0, R1 + y_of(cfg));
        csv::Writer w(os, {"p1", "region", "pi1", "delta1", "alpha"});
        for (std::size_t k = 0; k < cfg.points; ++k) {
            const double p1 = top * static_cast<double>(k) / (n - 1.0);
            const auto o = combined::date1_behavior(p1, R1, cfg.params);
            w.row({p1, std::string(combined::to_string(o.region)), o.pi1, o.delta1, o.alpha});
        }
    } else {
        throw DomainError("which", "which: expected fig2, fig2-boundaries or fig3");
    }
}

void olg(const RunConfig& cfg, std::ostream& os) {
    const sim::OlgResult res = cfg.prices.empty() ? sim::olg_simulate(cfg.params, cfg.periods, cfg.seed)
                                                  : sim::olg_simulate(cfg.params, cfg.prices);
    if (cfg.format == "csv") {
        std::vector<std::string> header;
        std::vector<std::vector<json>> rows;
        for (const auto& p : res.periods) {
            json j = p;
            j.erase("cohorts");
            std::vector<std::string> keys;
            std::vector<json> values;
            flatten(j, "", keys, values);
            if (header.empty()) header = keys;
            rows.push_back(values);
        }
        write_table(os, header, rows);
    } else {
        os << json(res).dump(2) << '\n';
    }
}

template <typename T>
void bind_optional(CLI::App* app, const std::string& name, std::optional<T>& slot, const std::string& help) {
    app->add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

std::vector<double> parse_list(const std::string& text, const char* field) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError(field, std::string(field) + ": '" + item + "' is not a number");
        }
    }
    return out;
}

}  // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DCE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError("DCE_SEED", "DCE_SEED: must be a non-negative integer");
        }
    }
    return 0;
}

void apply_config(const json& doc, RunConfig& cfg) {
    if (!doc.is_object()) throw DomainError("config", "config: expected a JSON object");
    static const std::map<std::string, std::function<void(const json&, RunConfig&)>> setters = {
        {"params", [](const json& v, RunConfig& c) { from_json(v, c.params); }},
        {"grid", [](const json& v, RunConfig& c) { oracle::from_json(v, c.grid); }},
        {"regime", [](const json& v, RunConfig& c) { c.regime = v.get<std::string>(); }},
        {"out", [](const json& v, RunConfig& c) { c.output = v.get<std::string>(); }},
        {"format", [](const json& v, RunConfig& c) { c.format = v.get<std::string>(); }},
        {"seed", [](const json& v, RunConfig& c) { c.seed = v.get<std::uint64_t>(); }},
        {"R1", [](const json& v, RunConfig& c) { c.R1 = v.get<double>(); }},
        {"R2", [](const json& v, RunConfig& c) { c.R2 = v.get<double>(); }},
        {"p1", [](const json& v, RunConfig& c) { c.p1 = v.get<double>(); }},
        {"price", [](const json& v, RunConfig& c) { c.price = v.get<double>(); }},
        {"plan", [](const json& v, RunConfig& c) { c.plan = v.get<std::vector<double>>(); }},
        {"target", [](const json& v, RunConfig& c) { c.target = v.get<std::string>(); }},
        {"axis", [](const json& v, RunConfig& c) { c.axis = v.get<std::string>(); }},
        {"range",
         [](const json& v, RunConfig& c) {
             c.range = {v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()};
         }},
        {"paths", [](const json& v, RunConfig& c) { c.paths = v.get<std::size_t>(); }},
        {"threads", [](const json& v, RunConfig& c) { c.threads = v.get<std::size_t>(); }},
        {"honest_share", [](const json& v, RunConfig& c) { c.honest_share = v.get<double>(); }},
        {"periods", [](const json& v, RunConfig& c) { c.periods = v.get<int>(); }},
        {"prices", [](const json& v, RunConfig& c) { c.prices = v.get<std::vector<double>>(); }},
        {"which", [](const json& v, RunConfig& c) { c.which = v.get<std::string>(); }},
        {"g", [](const json& v, RunConfig& c) { c.growth = v.get<double>(); }},
        {"points", [](const json& v, RunConfig& c) { c.points = v.get<std::size_t>(); }},
    };
    for (const auto& [key, value] : doc.items()) {
        auto it = setters.find(key);
        if (it != setters.end()) {
            try {
                it->second(value, cfg);
            } catch (const json::exception& e) {
                throw DomainError(key, key + ": " + e.what());
            }
        } else {
            // Bare model parameters are accepted at the top level too.
            from_json(json{{key, value}}, cfg.params);
        }
    }
}

std::vector<double> sweep_points(const SweepRange& r) {
    if (!(r.step > 0.0)) throw RangeError("sweep range: step must be positive");
    if (!(r.lo < r.hi)) throw RangeError("sweep range: lo must be below hi");
    const auto n = static_cast<std::size_t>(std::floor((r.hi - r.lo) / r.step + 1e-9));
    std::vector<double> xs;
    xs.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) xs.push_back(r.lo + static_cast<double>(i) * r.step);
    return xs;
}

json evaluate(const RunConfig& cfg) {
    if (cfg.command == "solve") return solve(cfg);
    if (cfg.command == "classify") return classify(cfg);
    if (cfg.command == "thresholds") return thresholds(cfg);
    if (cfg.command == "simulate") return simulate(cfg);
    throw DomainError("target", "target: expected solve, classify, thresholds or simulate");
}

void flatten(const json& j, const std::string& prefix, std::vector<std::string>& keys, std::vector<json>& values) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, keys, values);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), keys, values);
    } else {
        keys.push_back(prefix);
        values.push_back(j);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::optional<double> beta, pi0, y, y1, y2, p0, x;
    std::optional<std::uint64_t> seed;
    std::string config_path, plan_text, prices_text;
    std::vector<double> range;

    CLI::App app{"Strategic default with collateral and reputation"};
    app.require_subcommand(1);
    const char* commands[][2] = {
        {"solve", "Solve a regime and report its decision"},
        {"classify", "Classify the equilibrium region"},
        {"thresholds", "Report the price thresholds of a regime"},
        {"verify", "Check the worked examples and date-1 residuals; exit 3 on failure"},
        {"sweep", "Tabulate a command along one parameter axis"},
        {"simulate", "Monte Carlo over borrowers and price paths"},
        {"olg", "Overlapping-generations simulation"},
        {"figures", "Emit figure data as CSV"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
        sub->add_option("--config", config_path, "JSON file whose keys override the flags");
        sub->add_option("--regime", cfg.regime, "collateral | reputation | combined | constant");
        bind_optional(sub, "--beta", beta, "discount factor");
        bind_optional(sub, "--pi0", pi0, "prior that the borrower is honest");
        bind_optional(sub, "--y", y, "income at dates 1 and 2");
        bind_optional(sub, "--y1", y1, "date-1 income");
        bind_optional(sub, "--y2", y2, "date-2 income");
        bind_optional(sub, "--p0", p0, "initial asset price");
        bind_optional(sub, "--x", x, "non-pledgeable dividend");
        bind_optional(sub, "--R1", cfg.R1, "date-0 promised repayment");
        bind_optional(sub, "--R2", cfg.R2, "date-1 promised repayment");
        bind_optional(sub, "--p1", cfg.p1, "date-1 price");
        bind_optional(sub, "--price", cfg.price, "constant asset price");
        sub->add_option("--plan", plan_text, "b0,R1,b1,R2 to test for equilibrium membership");
        sub->add_option("--out", cfg.output, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        bind_optional(sub, "--seed", seed, "random seed (default $DCE_SEED)");
        sub->add_option("--price-points", cfg.grid.price_points, "price grid size");
        sub->add_option("--contract-points", cfg.grid.contract_points, "contract grid size");
        sub->add_option("--tolerance", cfg.grid.tolerance, "residual tolerance");
        sub->add_option("--target", cfg.target, "command evaluated at each sweep point");
        sub->add_option("--axis", cfg.axis, "beta | pi0 | y | p0 | x | R1");
        sub->add_option("--range", range, "lo hi step")->expected(3);
        sub->add_option("--paths", cfg.paths, "Monte Carlo paths");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        bind_optional(sub, "--honest-share", cfg.honest_share, "honest fraction of simulated borrowers");
        sub->add_option("--periods", cfg.periods, "OLG dates");
        sub->add_option("--prices", prices_text, "explicit OLG price path, comma separated");
        sub->add_option("--which", cfg.which, "fig2 | fig2-boundaries | fig3");
        sub->add_option("--g", cfg.growth, "income growth for fig2");
        sub->add_option("--points", cfg.points, "grid points per axis");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    try {
        if (beta) cfg.params.beta = *beta;
        if (pi0) cfg.params.pi0 = *pi0;
        if (y) cfg.params.y1 = cfg.params.y2 = *y;
        if (y1) cfg.params.y1 = *y1;
        if (y2) cfg.params.y2 = *y2;
        if (p0) cfg.params.p0 = *p0;
        if (x) cfg.params.x = *x;
        cfg.seed = seed ? *seed : default_seed();
        if (!plan_text.empty()) cfg.plan = parse_list(plan_text, "plan");
        if (!prices_text.empty()) cfg.prices = parse_list(prices_text, "prices");
        if (!range.empty()) cfg.range = {range[0], range[1], range[2]};

        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw IoError("cannot read config file: " + config_path);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                throw DomainError("config", "config: " + config_path + ": " + e.what());
            }
            apply_config(doc, cfg);
        }
        validate_params(cfg.params);
        oracle::validate_grid(cfg.grid);
        if (cfg.command == "sweep") sweep_points(cfg.range);

        std::ostringstream body;
        int status = Ok;
        if (cfg.command == "verify") {
            bool ok = false;
            body << verify(cfg, ok).dump(2) << '\n';
            status = ok ? Ok : VerifyFailure;
        } else if (cfg.command == "sweep") {
            sweep(cfg, body);
        } else if (cfg.command == "figures") {
            figures(cfg, body);
        } else if (cfg.command == "olg") {
            olg(cfg, body);
        } else {
            const json j = evaluate(cfg);
            if (cfg.format == "csv") write_json_as_csv(body, j);
            else body << j.dump(2) << '\n';
        }

        if (cfg.output.empty()) {
            out << body.str();
        } else {
            std::ofstream file(cfg.output);
            if (!file) throw IoError("cannot write output file: " + cfg.output);
            file << body.str();
            if (!file) throw IoError("failed writing output file: " + cfg.output);
        }
        return status;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return DomainFailure;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return DomainFailure;
    } catch (const OutOfRange& e) {
        err << "out of range: " << e.what() << '\n';
        return DomainFailure;
    } catch (const Indeterminate& e) {
        err << "indeterminate: " << e.what() << '\n';
        return DomainFailure;
    } catch (const NegativeConsumption& e) {
        err << "infeasible: " << e.what() << '\n';
        return DomainFailure;
    }
}

}  // namespace dce::cli
