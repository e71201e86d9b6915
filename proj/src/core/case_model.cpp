#include "core/case_model.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace avrc {

const FactorRegistry& FactorRegistry::standard() {
    static const FactorRegistry registry{{
        "data_quality",
        "accuracy",
        "safety",
        "consensus",
        "transparency",
        "correspondence",
        "expectation",
        "user_responsibility",
        "proper_use",
    }};
    return registry;
}

int FactorRegistry::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

const Subject* Case::find_subject(std::string_view subject_id) const {
    for (const auto& s : subjects) {
        if (s.id == subject_id) return &s;
    }
    return nullptr;
}

const RiskEvent* Case::find_event(std::string_view event_id) const {
    for (const auto& e : events) {
        if (e.id == event_id) return &e;
    }
    return nullptr;
}

bool operator==(const Case& a, const Case& b) {
    if (a.id != b.id || a.title != b.title || a.verdict != b.verdict ||
        a.automation != b.automation || a.subjects != b.subjects ||
        a.accident_types != b.accident_types || a.registry != b.registry ||
        a.events != b.events || a.chain_edges != b.chain_edges) {
        return false;
    }
    if (!a.prevention || !b.prevention) return a.prevention == b.prevention;
    return structurally_equal(*a.prevention, *b.prevention);
}

namespace {

bool layer_matches_role(Layer layer, SubjectRole role) {
    switch (layer) {
    case Layer::AiSystem:
    case Layer::ServiceProvider:
        return role == SubjectRole::Manufacturer;
    case Layer::Users:
        return role == SubjectRole::Driver || role == SubjectRole::ThirdParty;
    }
    return false;
}

} // namespace

ValidationResult validate_case(const Case& c) {
    ValidationResult result;
    auto add = [&](std::string code, std::string message, std::string locus) {
        result.violations.push_back({std::move(code), std::move(message), std::move(locus)});
    };

    std::set<std::string_view> subject_ids;
    for (const auto& s : c.subjects) {
        if (!subject_ids.insert(s.id).second) {
            add("E200", "duplicate subject id '" + s.id + "'", "subject:" + s.id);
        }
    }

    {
        std::set<std::string_view> seen;
        for (const auto& name : c.registry.names()) {
            if (!seen.insert(name).second) {
                add("E211", "duplicate registry entry '" + name + "'", "registry");
            }
        }
    }

    if (c.accident_types.empty()) {
        add("E207", "a case must declare at least one accident type", "accident_types");
    }

    std::set<std::string_view> event_ids;
    std::set<std::string_view> variables;
    for (const auto& e : c.events) {
        if (!event_ids.insert(e.id).second) {
            add("E203", "duplicate event id '" + e.id + "'", "event:" + e.id);
        }
        if (!variables.insert(e.variable).second) {
            add("E204", "variable '" + e.variable + "' is bound by more than one event",
                "event:" + e.id + ":var");
        }
        const Subject* subject = c.find_subject(e.subject);
        if (subject == nullptr) {
            add("E202", "event '" + e.id + "' references unknown subject '" + e.subject + "'",
                "event:" + e.id + ":subject");
        } else if (!layer_matches_role(e.layer, subject->role)) {
            add("E201",
                "layer/role mismatch: " + std::string(to_keyword(e.layer)) +
                    " events cannot attribute to " + std::string(to_keyword(subject->role)) +
                    " subject '" + subject->id + "'",
                "event:" + e.id + ":layer");
        }
        if (e.factors.empty()) {
            add("E205", "event '" + e.id + "' declares no factors", "event:" + e.id + ":factors");
        }
        for (const auto& f : e.factors) {
            if (!c.registry.contains(f.category)) {
                add("E206", "unknown factor category '" + f.category + "'",
                    "event:" + e.id + ":factor:" + f.category);
            }
        }
    }

    if (c.prevention) {
        for (const auto& var : formula_variables(*c.prevention)) {
            if (!variables.contains(var)) {
                add("E208", "unbound variable '" + var + "' in prevention", "prevention:" + var);
            }
        }
    }

    for (std::size_t i = 0; i < c.chain_edges.size(); ++i) {
        const auto& edge = c.chain_edges[i];
        const std::string locus = "edge:" + std::to_string(i);
        const RiskEvent* from = c.find_event(edge.from);
        const RiskEvent* to = c.find_event(edge.to);
        if (from == nullptr) {
            add("E209", "chain edge references unknown event '" + edge.from + "'", locus);
        }
        if (to == nullptr) {
            add("E209", "chain edge references unknown event '" + edge.to + "'", locus);
        }
        if (from != nullptr && to != nullptr && from->sequence >= to->sequence) {
            add("E210",
                "chain edge '" + edge.from + " -> " + edge.to +
                    "' violates chronological order",
                locus);
        }
    }

    return result;
}

std::string_view to_keyword(AutomationLevel v) {
    switch (v) {
    case AutomationLevel::L0: return "L0";
    case AutomationLevel::L1: return "L1";
    case AutomationLevel::L2: return "L2";
    case AutomationLevel::L3: return "L3";
    case AutomationLevel::L4: return "L4";
    case AutomationLevel::L5: return "L5";
    }
    return "L0";
}

std::string_view to_keyword(SubjectRole v) {
    switch (v) {
    case SubjectRole::Manufacturer: return "manufacturer";
    case SubjectRole::Driver: return "driver";
    case SubjectRole::ThirdParty: return "third_party";
    }
    return "manufacturer";
}

std::string_view to_keyword(AccidentType v) {
    switch (v) {
    case AccidentType::FunctionalSafety: return "functional_safety";
    case AccidentType::Sotif: return "sotif";
    case AccidentType::DriverOperation: return "driver_operation";
    case AccidentType::ThirdPartyAction: return "third_party_action";
    }
    return "functional_safety";
}

std::string_view to_keyword(Layer v) {
    switch (v) {
    case Layer::AiSystem: return "ai_system";
    case Layer::ServiceProvider: return "service_provider";
    case Layer::Users: return "users";
    }
    return "ai_system";
}

std::string_view to_keyword(Severity v) {
    switch (v) {
    case Severity::Slight: return "slight";
    case Severity::Moderate: return "moderate";
    case Severity::Serious: return "serious";
    }
    return "slight";
}

std::string_view to_keyword(FactorKind v) {
    switch (v) {
    case FactorKind::Inevitable: return "inevitable";
    case FactorKind::Coincidental: return "coincidental";
    }
    return "coincidental";
}

std::optional<AutomationLevel> automation_from_keyword(std::string_view s) {
    if (s.size() == 2 && s[0] == 'L' && s[1] >= '0' && s[1] <= '5') {
        return static_cast<AutomationLevel>(s[1] - '0');
    }
    return std::nullopt;
}

std::optional<SubjectRole> role_from_keyword(std::string_view s) {
    if (s == "manufacturer") return SubjectRole::Manufacturer;
    if (s == "driver") return SubjectRole::Driver;
    if (s == "third_party") return SubjectRole::ThirdParty;
    return std::nullopt;
}

std::optional<AccidentType> accident_type_from_keyword(std::string_view s) {
    if (s == "functional_safety") return AccidentType::FunctionalSafety;
    if (s == "sotif") return AccidentType::Sotif;
    if (s == "driver_operation") return AccidentType::DriverOperation;
    if (s == "third_party_action") return AccidentType::ThirdPartyAction;
    return std::nullopt;
}

std::optional<Layer> layer_from_keyword(std::string_view s) {
    if (s == "ai_system") return Layer::AiSystem;
    if (s == "service_provider") return Layer::ServiceProvider;
    if (s == "users") return Layer::Users;
    return std::nullopt;
}

std::optional<Severity> severity_from_keyword(std::string_view s) {
    if (s == "slight") return Severity::Slight;
    if (s == "moderate") return Severity::Moderate;
    if (s == "serious") return Severity::Serious;
    return std::nullopt;
}

std::optional<FactorKind> kind_from_keyword(std::string_view s) {
    if (s == "inevitable") return FactorKind::Inevitable;
    if (s == "coincidental") return FactorKind::Coincidental;
    return std::nullopt;
}

} // namespace avrc
