#pragma once

#include "core/case_model.hpp"

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace avrc {

enum class Outcome { Collision, PossibleNonCollision };

enum class FactorState { Occurred, Averted };

std::string_view to_keyword(Outcome v);
std::string_view to_keyword(FactorState v);

struct FactorPartition {
    std::vector<RiskEvent> inevitable;
    std::vector<RiskEvent> coincidental;
};

// Splits events by FactorKind, declaration order preserved.
FactorPartition partition_factors(const Case& c);

// Collision iff the prevention formula evaluates false. The binding maps
// each variable to "was this risk averted".
Outcome evaluate_outcome(const Formula& prevention,
                         const std::map<std::string, bool>& assignment);

struct ScenarioRow {
    std::vector<FactorState> states;  // parallel to ScenarioTable::variables
    Outcome outcome = Outcome::Collision;
    bool is_actual = false;  // the all-Occurred row: what really happened
};

struct ScenarioTable {
    std::vector<std::string> variables;  // coincidental variables, declaration order
    std::vector<ScenarioRow> rows;       // 2^k rows in canonical counting order
};

// Hard cap on permuted coincidental factors (2^20 rows).
inline constexpr int kMaxCoincidentalFactors = 20;

// Permutes every coincidental variable with inevitable variables pinned to
// Occurred (false). Rows are ordered by binary counting with the first
// variable most significant and Occurred before Averted, so the actual
// scenario is always row 0. Throws Error{EnumerationCapExceeded}.
ScenarioTable enumerate_scenarios(const Case& c);

// Exact Banzhaf-style influence: the fraction of assignments to the other
// coincidental variables in which toggling this event's variable flips the
// outcome. Denominator is 2^(k-1).
struct Pivotality {
    std::uint64_t flips = 0;
    std::uint64_t contexts = 1;

    double value() const { return static_cast<double>(flips) / static_cast<double>(contexts); }
    friend bool operator==(const Pivotality&, const Pivotality&) = default;
};

// Throws Error{UnknownEvent} for unknown ids and Error{InvalidArgument}
// for inevitable events.
Pivotality pivotality(const Case& c, std::string_view event_id);

} // namespace avrc
