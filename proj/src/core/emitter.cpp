#include "core/emitter.hpp"

#include <algorithm>

namespace avrc {

std::string escape_string(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

void emit_event(const Case& c, const RiskEvent& event, std::string& out) {
    out += "    event " + event.id + " " + escape_string(event.description) + " {\n";
    out += "      subject = " + event.subject + ";\n";
    out += "      layer = " + std::string(to_keyword(event.layer)) + ";\n";

    std::vector<Factor> factors = event.factors;
    std::stable_sort(factors.begin(), factors.end(), [&](const Factor& a, const Factor& b) {
        return c.registry.index_of(a.category) < c.registry.index_of(b.category);
    });
    out += "      factors = [";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ", ";
        out += factors[i].category + ":" + std::string(to_keyword(factors[i].severity));
        if (!factors[i].note.empty()) out += " " + escape_string(factors[i].note);
    }
    out += "];\n";

    out += "      kind = " + std::string(to_keyword(event.kind)) + ";\n";
    out += "      var = " + event.variable + ";\n";
    if (!event.occurred_label.empty()) {
        out += "      occurred = " + escape_string(event.occurred_label) + ";\n";
    }
    if (!event.averted_label.empty()) {
        out += "      averted = " + escape_string(event.averted_label) + ";\n";
    }
    out += "    }\n";
}

} // namespace

std::string emit_canonical(const Case& c) {
    std::string out;
    out += "case " + escape_string(c.id) + " {\n";
    if (!c.title.empty()) out += "  title = " + escape_string(c.title) + ";\n";
    if (!c.verdict.empty()) out += "  verdict = " + escape_string(c.verdict) + ";\n";
    out += "  automation_level = " + std::string(to_keyword(c.automation)) + ";\n";

    if (c.subjects.empty()) {
        out += "  subjects {}\n";
    } else {
        out += "  subjects {\n";
        for (const auto& s : c.subjects) {
            out += "    " + std::string(to_keyword(s.role)) + " " + s.id + " " +
                   escape_string(s.label) + ";\n";
        }
        out += "  }\n";
    }

    out += "  accident_types = [";
    bool first = true;
    for (AccidentType type : c.accident_types) {
        if (!first) out += ", ";
        first = false;
        out += to_keyword(type);
    }
    out += "];\n";

    if (!(c.registry == FactorRegistry::standard())) {
        out += "  registry = [";
        for (std::size_t i = 0; i < c.registry.names().size(); ++i) {
            if (i > 0) out += ", ";
            out += c.registry.names()[i];
        }
        out += "];\n";
    }

    if (c.events.empty()) {
        out += "  events {}\n";
    } else {
        out += "  events {\n";
        for (const auto& e : c.events) emit_event(c, e, out);
        out += "  }\n";
    }

    if (c.chain_edges.empty()) {
        out += "  chain {}\n";
    } else {
        out += "  chain {\n";
        for (const auto& edge : c.chain_edges) {
            out += "    " + edge.from + " -> " + edge.to + ";\n";
        }
        out += "  }\n";
    }

    out += "  prevention = " +
           (c.prevention ? formula_to_source(*c.prevention) : std::string("true")) + ";\n";
    out += "}\n";
    return out;
}

} // namespace avrc
