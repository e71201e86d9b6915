#pragma once

#include "core/counterfactual.hpp"
#include "core/riskchain.hpp"

#include <map>
#include <string>
#include <vector>

namespace avrc {

enum class Tier { Primary, Secondary, None };

std::string_view to_keyword(Tier v);

struct ResponsibilityAssignment {
    std::string subject;
    Tier tier = Tier::None;
    int rank = 0;  // 1 = most responsible; 0 = unranked (None tier)
    std::vector<std::string> rationale;
};

// Every event under exactly its declared subject; subjects without
// events map to an empty list.
std::map<std::string, std::vector<RiskEvent>> attribute_factors(const RiskChain& chain);

// Total order over subjects with attributed events, computed by the rule
// ladder (later rules only break ties left by earlier ones):
//   R2  a subject with an inevitable event outranks only-coincidental ones
//   R3  a subject whose consensus/transparency/correspondence event has a
//       chain edge into another subject's event outranks that subject
//   R4  greater severity multiset (serious, then moderate, then slight)
//   R5  manufacturer > driver > third party
// Remaining ties fall back to subject id so the result never depends on
// declaration order. Rank 1 is Primary, lower ranks Secondary; subjects
// without events are None. Throws Error{InducementCycle} when R3 relates
// two subjects in both directions.
std::vector<ResponsibilityAssignment> rank_subjects(const Case& c, const ScenarioTable& table,
                                                    const RiskChain& chain);

// Deterministic explanation lines for one assignment; includes the exact
// pivotality of each coincidental event, recomputed from the scenario
// table.
std::vector<std::string> rationale(const ResponsibilityAssignment& assignment,
                                   const RiskChain& chain, const ScenarioTable& table);

} // namespace avrc
