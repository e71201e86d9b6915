#pragma once

#include "core/case_model.hpp"
#include "core/diagnostics.hpp"

#include <optional>
#include <string_view>

namespace avrc {

struct ParseResult {
    std::optional<Case> parsed;  // engaged only when diagnostics carry no errors
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return parsed.has_value(); }
};

// Front door of the `.avcase` language: tokenize, parse the fixed-order
// block grammar, then run validate_case and surface each violation as an
// error diagnostic anchored to the construct that caused it.
ParseResult parse_case(std::string_view source);

} // namespace avrc
