#pragma once

#include <json.hpp>

#include "dce/collateral.hpp"
#include "dce/combined.hpp"
#include "dce/model.hpp"
#include "dce/oracle.hpp"
#include "dce/reputation.hpp"
#include "dce/simulation.hpp"

// nlohmann::json adapters. Enums are written as their labels; every reader
// accepts exactly what the matching writer emits.
namespace dce {

using json = nlohmann::json;

/// Accepts beta, pi0, y1, y2, p0, x; "y" sets both incomes. Missing keys keep the
/// value already in `m`. Unknown keys throw DomainError.
void from_json(const json& j, ModelParams& m);
void to_json(json& j, const ModelParams& m);
void to_json(json& j, const Contract& c);
void from_json(const json& j, Contract& c);

namespace collateral {
void to_json(json& j, const CollateralDecision& d);
void from_json(const json& j, CollateralDecision& d);
void to_json(json& j, const Date1Contract& d);
}  // namespace collateral

namespace reputation {
void to_json(json& j, const ContractPlan& p);
void from_json(const json& j, ContractPlan& p);
void to_json(json& j, const RegionResult& r);
void from_json(const json& j, RegionResult& r);
void to_json(json& j, const ClassResult& r);
}  // namespace reputation

namespace combined {
void to_json(json& j, const Date1Outcome& o);
void from_json(const json& j, Date1Outcome& o);
void to_json(json& j, const KeepContract& k);
void to_json(json& j, const Date0Solution& s);
void from_json(const json& j, Date0Solution& s);
void to_json(json& j, const Pi0Bound& b);
void from_json(const json& j, Pi0Bound& b);
}  // namespace combined

namespace oracle {
void to_json(json& j, const GridSpec& g);
void from_json(const json& j, GridSpec& g);
void to_json(json& j, const ResidualReport& r);
void from_json(const json& j, ResidualReport& r);
void to_json(json& j, const Optimum& o);
void from_json(const json& j, Optimum& o);
void to_json(json& j, const KeepInterval& k);
void from_json(const json& j, KeepInterval& k);
}  // namespace oracle

namespace sim {
void to_json(json& j, const SimStats& s);
void from_json(const json& j, SimStats& s);
void to_json(json& j, const TypeMasses& m);
void from_json(const json& j, TypeMasses& m);
void to_json(json& j, const Cohort& c);
void from_json(const json& j, Cohort& c);
void to_json(json& j, const OlgPeriod& p);
void from_json(const json& j, OlgPeriod& p);
void to_json(json& j, const OlgResult& r);
void from_json(const json& j, OlgResult& r);
void to_json(json& j, const EquilibriumSummary& s);
void from_json(const json& j, EquilibriumSummary& s);
}  // namespace sim

}  // namespace dce
