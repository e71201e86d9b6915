#include "core/riskchain.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace avrc {

const Subject* RiskChain::find_subject(std::string_view id) const {
    for (const auto& s : subjects) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

const RiskEvent* RiskChain::find_event(std::string_view id) const {
    for (const auto& e : events) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

RiskChain build_chain(const Case& c) {
    for (const auto& edge : c.chain_edges) {
        const RiskEvent* from = c.find_event(edge.from);
        const RiskEvent* to = c.find_event(edge.to);
        if (from == nullptr || to == nullptr) {
            throw Error(ErrorCode::InvalidEdge, "chain edge '" + edge.from + " -> " + edge.to +
                                                    "' references an unknown event");
        }
        if (from->sequence >= to->sequence) {
            throw Error(ErrorCode::InvalidEdge, "chain edge '" + edge.from + " -> " + edge.to +
                                                    "' violates chronological order");
        }
    }
    return RiskChain{c.subjects, c.events, c.chain_edges};
}

std::string layer_display(const RiskChain& chain, const RiskEvent& event) {
    if (event.layer == Layer::AiSystem) return "AI system";
    const Subject* subject = chain.find_subject(event.subject);
    const std::string label = subject != nullptr ? subject->label : event.subject;
    if (event.layer == Layer::ServiceProvider) return label + " (service provider)";
    return label + " (Users)";
}

std::vector<HazardRow> hazard_table(const RiskChain& chain) {
    std::vector<HazardRow> rows;
    for (const auto& event : chain.events) {
        const std::string layer = layer_display(chain, event);
        for (const auto& factor : event.factors) {
            rows.push_back({event.id, event.description, layer, factor.category,
                            factor.severity, factor.note});
        }
    }
    return rows;
}

std::vector<RiskEvent> trace_chain(const RiskChain& chain, std::string_view event_id) {
    const RiskEvent* target = chain.find_event(event_id);
    if (target == nullptr) {
        throw Error(ErrorCode::UnknownEvent,
                    "unknown event '" + std::string(event_id) + "'");
    }

    std::multimap<std::string_view, std::string_view> incoming;  // to -> from
    for (const auto& edge : chain.edges) {
        incoming.emplace(edge.to, edge.from);
    }

    std::set<std::string_view> ancestors;
    std::vector<std::string_view> frontier{target->id};
    while (!frontier.empty()) {
        const std::string_view current = frontier.back();
        frontier.pop_back();
        auto [begin, end] = incoming.equal_range(current);
        for (auto it = begin; it != end; ++it) {
            if (ancestors.insert(it->second).second) {
                frontier.push_back(it->second);
            }
        }
    }

    std::vector<RiskEvent> result;
    for (const auto& event : chain.events) {  // chronological by construction
        if (ancestors.contains(event.id) && event.id != target->id) {
            result.push_back(event);
        }
    }
    return result;
}

} // namespace avrc
