#include "core/structured.hpp"

#include "core/errors.hpp"

#include <string>

namespace avrc {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::MalformedDocument, "malformed case document: " + what);
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

const json& member(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end()) malformed(std::string("missing '") + key + "'");
    return *it;
}

std::string string_member(const json& node, const char* key) {
    const json& value = member(node, key);
    if (!value.is_string()) malformed(std::string("'") + key + "' must be a string");
    return value.get<std::string>();
}

std::string optional_string(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end()) return {};
    if (!it->is_string()) malformed(std::string("'") + key + "' must be a string");
    return it->get<std::string>();
}

template <typename T>
T keyword_member(const json& node, const char* key,
                 std::optional<T> (*from_keyword)(std::string_view)) {
    auto parsed = from_keyword(string_member(node, key));
    if (!parsed) malformed(std::string("bad value for '") + key + "'");
    return *parsed;
}

} // namespace

json formula_to_json(const Formula& formula) {
    switch (formula.kind()) {
    case Formula::Kind::Const:
        return json{{"op", "const"}, {"value", formula.value()}};
    case Formula::Kind::Var:
        return json{{"op", "var"}, {"name", formula.name()}};
    case Formula::Kind::Not:
        return json{{"op", "not"}, {"arg", formula_to_json(*formula.lhs())}};
    case Formula::Kind::And:
        return json{{"op", "and"},
                    {"lhs", formula_to_json(*formula.lhs())},
                    {"rhs", formula_to_json(*formula.rhs())}};
    case Formula::Kind::Or:
        return json{{"op", "or"},
                    {"lhs", formula_to_json(*formula.lhs())},
                    {"rhs", formula_to_json(*formula.rhs())}};
    }
    malformed("corrupt formula node");
}

FormulaPtr formula_from_json(const json& node) {
    if (!node.is_object()) malformed("formula node must be an object");
    const std::string op = string_member(node, "op");
    if (op == "const") {
        const json& value = member(node, "value");
        if (!value.is_boolean()) malformed("'value' must be a boolean");
        return Formula::constant(value.get<bool>());
    }
    if (op == "var") return Formula::variable(string_member(node, "name"));
    if (op == "not") return Formula::negation(formula_from_json(member(node, "arg")));
    if (op == "and") {
        return Formula::conjunction(formula_from_json(member(node, "lhs")),
                                    formula_from_json(member(node, "rhs")));
    }
    if (op == "or") {
        return Formula::disjunction(formula_from_json(member(node, "lhs")),
                                    formula_from_json(member(node, "rhs")));
    }
    malformed("unknown formula op '" + op + "'");
}

json to_structured(const Case& c) {
    json doc;
    doc["id"] = c.id;
    if (!c.title.empty()) doc["title"] = c.title;
    if (!c.verdict.empty()) doc["verdict"] = c.verdict;
    doc["automation"] = lowercase(to_keyword(c.automation));

    json subjects = json::array();
    for (const auto& s : c.subjects) {
        subjects.push_back(
            {{"id", s.id}, {"role", to_keyword(s.role)}, {"label", s.label}});
    }
    doc["subjects"] = std::move(subjects);

    json types = json::array();
    for (AccidentType type : c.accident_types) types.push_back(to_keyword(type));
    doc["accident_types"] = std::move(types);

    doc["registry"] = c.registry.names();

    json events = json::array();
    for (const auto& e : c.events) {
        json event;
        event["id"] = e.id;
        event["description"] = e.description;
        event["subject"] = e.subject;
        event["layer"] = to_keyword(e.layer);
        json factors = json::array();
        for (const auto& f : e.factors) {
            json factor = {{"category", f.category}, {"severity", to_keyword(f.severity)}};
            if (!f.note.empty()) factor["note"] = f.note;
            factors.push_back(std::move(factor));
        }
        event["factors"] = std::move(factors);
        event["kind"] = to_keyword(e.kind);
        event["variable"] = e.variable;
        if (!e.occurred_label.empty()) event["occurred_label"] = e.occurred_label;
        if (!e.averted_label.empty()) event["averted_label"] = e.averted_label;
        events.push_back(std::move(event));
    }
    doc["events"] = std::move(events);

    json chain = json::array();
    for (const auto& edge : c.chain_edges) {
        chain.push_back({{"from", edge.from}, {"to", edge.to}});
    }
    doc["chain"] = std::move(chain);

    doc["prevention"] = c.prevention ? formula_to_json(*c.prevention) : json(nullptr);
    return doc;
}

Case case_from_structured(const json& document) {
    if (!document.is_object()) malformed("top-level value must be an object");
    Case c;
    c.id = string_member(document, "id");
    c.title = optional_string(document, "title");
    c.verdict = optional_string(document, "verdict");

    const std::string automation = string_member(document, "automation");
    if (automation.size() != 2 || automation[0] != 'l' || automation[1] < '0' ||
        automation[1] > '5') {
        malformed("bad value for 'automation'");
    }
    c.automation = static_cast<AutomationLevel>(automation[1] - '0');

    const json& subjects = member(document, "subjects");
    if (!subjects.is_array()) malformed("'subjects' must be an array");
    for (const json& node : subjects) {
        Subject s;
        s.id = string_member(node, "id");
        s.role = keyword_member(node, "role", role_from_keyword);
        s.label = string_member(node, "label");
        c.subjects.push_back(std::move(s));
    }

    const json& types = member(document, "accident_types");
    if (!types.is_array()) malformed("'accident_types' must be an array");
    for (const json& node : types) {
        if (!node.is_string()) malformed("accident type entries must be strings");
        auto type = accident_type_from_keyword(node.get<std::string>());
        if (!type) malformed("unknown accident type '" + node.get<std::string>() + "'");
        c.accident_types.insert(*type);
    }

    if (auto it = document.find("registry"); it != document.end()) {
        if (!it->is_array()) malformed("'registry' must be an array");
        std::vector<std::string> names;
        for (const json& node : *it) {
            if (!node.is_string()) malformed("registry entries must be strings");
            names.push_back(node.get<std::string>());
        }
        c.registry = FactorRegistry(std::move(names));
    }

    const json& events = member(document, "events");
    if (!events.is_array()) malformed("'events' must be an array");
    for (const json& node : events) {
        RiskEvent e;
        e.sequence = static_cast<int>(c.events.size());
        e.id = string_member(node, "id");
        e.description = string_member(node, "description");
        e.subject = string_member(node, "subject");
        e.layer = keyword_member(node, "layer", layer_from_keyword);
        const json& factors = member(node, "factors");
        if (!factors.is_array()) malformed("'factors' must be an array");
        for (const json& factor : factors) {
            Factor f;
            f.category = string_member(factor, "category");
            f.severity = keyword_member(factor, "severity", severity_from_keyword);
            f.note = optional_string(factor, "note");
            e.factors.push_back(std::move(f));
        }
        e.kind = keyword_member(node, "kind", kind_from_keyword);
        e.variable = string_member(node, "variable");
        e.occurred_label = optional_string(node, "occurred_label");
        e.averted_label = optional_string(node, "averted_label");
        c.events.push_back(std::move(e));
    }

    const json& chain = member(document, "chain");
    if (!chain.is_array()) malformed("'chain' must be an array");
    for (const json& node : chain) {
        c.chain_edges.push_back({string_member(node, "from"), string_member(node, "to")});
    }

    const json& prevention = member(document, "prevention");
    c.prevention = prevention.is_null() ? nullptr : formula_from_json(prevention);
    return c;
}

} // namespace avrc
