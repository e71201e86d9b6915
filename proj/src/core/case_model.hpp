#pragma once

#include "core/formula.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace avrc {

enum class AutomationLevel { L0, L1, L2, L3, L4, L5 };

// The automated driving system itself is deliberately not a role: every
// risk behavior attributes to the manufacturer behind it or to a human.
enum class SubjectRole { Manufacturer, Driver, ThirdParty };

enum class AccidentType { FunctionalSafety, Sotif, DriverOperation, ThirdPartyAction };

enum class Layer { AiSystem, ServiceProvider, Users };

// Hazard grade, totally ordered Slight < Moderate < Serious.
enum class Severity { Slight, Moderate, Serious };

enum class FactorKind { Inevitable, Coincidental };

struct Subject {
    std::string id;
    SubjectRole role = SubjectRole::Manufacturer;
    std::string label;

    friend bool operator==(const Subject&, const Subject&) = default;
};

// Active set of factor category names. Events may only reference names
// registered here; the registry also fixes the canonical factor order.
class FactorRegistry {
public:
    FactorRegistry() = default;
    explicit FactorRegistry(std::vector<std::string> names) : names_(std::move(names)) {}

    static const FactorRegistry& standard();

    const std::vector<std::string>& names() const { return names_; }
    bool contains(std::string_view name) const { return index_of(name) >= 0; }
    int index_of(std::string_view name) const;

    friend bool operator==(const FactorRegistry&, const FactorRegistry&) = default;

private:
    std::vector<std::string> names_;
};

struct Factor {
    std::string category;
    Severity severity = Severity::Slight;
    std::string note;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct RiskEvent {
    std::string id;
    std::string description;   // the table "Indicator"
    std::string subject;       // Subject::id
    Layer layer = Layer::AiSystem;
    std::vector<Factor> factors;  // non-empty, kept in registry order
    FactorKind kind = FactorKind::Coincidental;
    std::string variable;      // bound boolean; true means the risk was averted
    // Table glosses for the two variable states; empty when not authored.
    std::string occurred_label;
    std::string averted_label;
    int sequence = 0;          // declaration index; chronology by construction

    friend bool operator==(const RiskEvent&, const RiskEvent&) = default;
};

struct ChainEdge {
    std::string from;
    std::string to;

    friend bool operator==(const ChainEdge&, const ChainEdge&) = default;
};

struct Case {
    std::string id;
    std::string title;
    std::string verdict;  // real-world outcome, echoed in reports as context
    AutomationLevel automation = AutomationLevel::L0;
    std::vector<Subject> subjects;
    std::set<AccidentType> accident_types;  // non-empty
    FactorRegistry registry = FactorRegistry::standard();
    std::vector<RiskEvent> events;          // declaration order = chronology
    std::vector<ChainEdge> chain_edges;     // from precedes to
    FormulaPtr prevention;

    const Subject* find_subject(std::string_view id) const;
    const RiskEvent* find_event(std::string_view id) const;
};

bool operator==(const Case& a, const Case& b);
inline bool operator!=(const Case& a, const Case& b) { return !(a == b); }

struct Violation {
    std::string code;     // stable rule id, e.g. "E201"
    std::string message;
    std::string locus;    // e.g. "event:no_takeover", "prevention", "edge:1"
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Pure structural check of every Case invariant. Violations are data;
// the function itself never fails.
ValidationResult validate_case(const Case& c);

// Enumeration <-> text, shared by the DSL, the structured export and the
// report renderer. from_* return nullopt on unknown names.
std::string_view to_keyword(AutomationLevel v);
std::string_view to_keyword(SubjectRole v);
std::string_view to_keyword(AccidentType v);
std::string_view to_keyword(Layer v);
std::string_view to_keyword(Severity v);
std::string_view to_keyword(FactorKind v);
std::optional<AutomationLevel> automation_from_keyword(std::string_view s);
std::optional<SubjectRole> role_from_keyword(std::string_view s);
std::optional<AccidentType> accident_type_from_keyword(std::string_view s);
std::optional<Layer> layer_from_keyword(std::string_view s);
std::optional<Severity> severity_from_keyword(std::string_view s);
std::optional<FactorKind> kind_from_keyword(std::string_view s);

} // namespace avrc
