#pragma once

#include "core/case_model.hpp"

#include <string_view>
#include <vector>

namespace avrc {

// Chronological DAG of risk events. Acyclicity holds by construction:
// every edge points from an earlier event to a later one.
struct RiskChain {
    std::vector<Subject> subjects;
    std::vector<RiskEvent> events;  // declaration order
    std::vector<ChainEdge> edges;

    const Subject* find_subject(std::string_view id) const;
    const RiskEvent* find_event(std::string_view id) const;
};

// One behavior-analysis table row per (event, factor) pair.
struct HazardRow {
    std::string event_id;
    std::string indicator;
    std::string layer;  // e.g. "AI system", "Manufacturer (service provider)"
    std::string factor;
    Severity hazard = Severity::Slight;
    std::string note;
};

// Throws Error{InvalidEdge} on edges the parser would have rejected.
RiskChain build_chain(const Case& c);

std::vector<HazardRow> hazard_table(const RiskChain& chain);

// All ancestors of event_id via causal edges, chronological, excluding
// the event itself. Throws Error{UnknownEvent}.
std::vector<RiskEvent> trace_chain(const RiskChain& chain, std::string_view event_id);

// "AI system" / "<label> (service provider)" / "<label> (Users)"
std::string layer_display(const RiskChain& chain, const RiskEvent& event);

} // namespace avrc
