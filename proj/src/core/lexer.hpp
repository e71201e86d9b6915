#pragma once

#include "core/diagnostics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace avrc {

enum class TokenKind {
    Identifier,
    Level,       // L0..L5
    String,      // quoted, value holds the decoded text
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Equals,
    Semicolon,
    Comma,
    Colon,
    Arrow,       // ->
    Amp,
    Pipe,
    Bang,
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string text;   // raw lexeme
    std::string value;  // decoded value for strings, otherwise == text
    SourceSpan span;
};

struct TokenizeResult {
    std::vector<Token> tokens;  // always ends with EndOfInput when ok()
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// '#' starts a comment running to end of line. Strings are single-line
// with \" and \\ as the only escapes.
TokenizeResult tokenize(std::string_view source);

} // namespace avrc
