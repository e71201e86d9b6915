#include "core/counterfactual.hpp"

#include "core/errors.hpp"

#include <string>

namespace avrc {

std::string_view to_keyword(Outcome v) {
    return v == Outcome::Collision ? "collision" : "possible_non_collision";
}

std::string_view to_keyword(FactorState v) {
    return v == FactorState::Occurred ? "occurred" : "averted";
}

FactorPartition partition_factors(const Case& c) {
    FactorPartition partition;
    for (const auto& event : c.events) {
        (event.kind == FactorKind::Inevitable ? partition.inevitable : partition.coincidental)
            .push_back(event);
    }
    return partition;
}

Outcome evaluate_outcome(const Formula& prevention,
                         const std::map<std::string, bool>& assignment) {
    return evaluate(prevention, assignment) ? Outcome::PossibleNonCollision
                                            : Outcome::Collision;
}

namespace {

struct EnumerationContext {
    std::vector<std::string> variables;        // coincidental, declaration order
    std::map<std::string, bool> binding;       // inevitable variables pinned false
};

EnumerationContext make_context(const Case& c) {
    EnumerationContext ctx;
    for (const auto& event : c.events) {
        if (event.kind == FactorKind::Coincidental) {
            ctx.variables.push_back(event.variable);
        } else {
            ctx.binding[event.variable] = false;  // the risk did occur
        }
    }
    return ctx;
}

void require_enumerable(std::size_t k) {
    if (k > static_cast<std::size_t>(kMaxCoincidentalFactors)) {
        throw Error(ErrorCode::EnumerationCapExceeded,
                    "enumeration cap exceeded: " + std::to_string(k) +
                        " coincidental factors, limit is " +
                        std::to_string(kMaxCoincidentalFactors));
    }
}

} // namespace

ScenarioTable enumerate_scenarios(const Case& c) {
    if (!c.prevention) {
        throw Error(ErrorCode::InvalidArgument, "case has no prevention formula");
    }
    EnumerationContext ctx = make_context(c);
    const std::size_t k = ctx.variables.size();
    require_enumerable(k);

    ScenarioTable table;
    table.variables = ctx.variables;
    const std::uint64_t row_count = std::uint64_t{1} << k;
    table.rows.reserve(row_count);

    for (std::uint64_t index = 0; index < row_count; ++index) {
        ScenarioRow row;
        row.states.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            const bool averted = (index >> (k - 1 - j)) & 1;  // first variable = MSB
            row.states[j] = averted ? FactorState::Averted : FactorState::Occurred;
            ctx.binding[ctx.variables[j]] = averted;
        }
        row.outcome = evaluate_outcome(*c.prevention, ctx.binding);
        row.is_actual = index == 0;
        table.rows.push_back(std::move(row));
    }
    return table;
}

Pivotality pivotality(const Case& c, std::string_view event_id) {
    const RiskEvent* event = c.find_event(event_id);
    if (event == nullptr) {
        throw Error(ErrorCode::UnknownEvent, "unknown event '" + std::string(event_id) + "'");
    }
    if (event->kind != FactorKind::Coincidental) {
        throw Error(ErrorCode::InvalidArgument,
                    "pivotality is defined only for coincidental events; '" +
                        std::string(event_id) + "' is inevitable");
    }
    if (!c.prevention) {
        throw Error(ErrorCode::InvalidArgument, "case has no prevention formula");
    }

    EnumerationContext ctx = make_context(c);
    std::vector<std::string> others;
    for (const auto& variable : ctx.variables) {
        if (variable != event->variable) others.push_back(variable);
    }
    require_enumerable(others.size() + 1);

    Pivotality result;
    result.contexts = std::uint64_t{1} << others.size();
    for (std::uint64_t index = 0; index < result.contexts; ++index) {
        for (std::size_t j = 0; j < others.size(); ++j) {
            ctx.binding[others[j]] = (index >> (others.size() - 1 - j)) & 1;
        }
        ctx.binding[event->variable] = false;
        const Outcome occurred = evaluate_outcome(*c.prevention, ctx.binding);
        ctx.binding[event->variable] = true;
        const Outcome averted = evaluate_outcome(*c.prevention, ctx.binding);
        if (occurred != averted) ++result.flips;
    }
    return result;
}

} // namespace avrc
