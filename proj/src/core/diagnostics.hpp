#pragma once

#include <string>
#include <vector>

namespace avrc {

// 1-based position of a construct in a source document. Columns count
// bytes, not display cells.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Diagnostic {
    enum class Level { Error, Warning };

    Level level = Level::Error;
    std::string code;    // stable identifier, e.g. "E001"
    std::string message;
    SourceSpan span;

    bool is_error() const { return level == Level::Error; }
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        if (d.is_error()) return true;
    }
    return false;
}

// "line:col: error[E001]: message" — one line per diagnostic.
std::string render_diagnostic(const Diagnostic& diagnostic);
std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics);

} // namespace avrc
