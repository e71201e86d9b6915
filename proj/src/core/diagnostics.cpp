#include "core/diagnostics.hpp"

#include <sstream>

namespace avrc {

std::string render_diagnostic(const Diagnostic& diagnostic) {
    std::ostringstream out;
    out << diagnostic.span.line << ':' << diagnostic.span.column << ": "
        << (diagnostic.is_error() ? "error" : "warning")
        << '[' << diagnostic.code << "]: " << diagnostic.message;
    return out.str();
}

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        out += render_diagnostic(d);
        out += '\n';
    }
    return out;
}

} // namespace avrc
