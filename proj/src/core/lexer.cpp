#include "core/lexer.hpp"

#include <cctype>

namespace avrc {

namespace {

// Locale-independent; identifiers are ASCII only.
bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {}

    TokenizeResult run() {
        while (!at_end()) {
            skip_trivia();
            if (at_end()) break;
            lex_token();
        }
        push_simple(TokenKind::EndOfInput, "", span_here(1));
        return std::move(result_);
    }

private:
    bool at_end() const { return pos_ >= source_.size(); }
    char peek() const { return source_[pos_]; }
    char peek_next() const { return pos_ + 1 < source_.size() ? source_[pos_ + 1] : '\0'; }

    void advance() {
        if (source_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    SourceSpan span_here(int length) const { return {line_, column_, length}; }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void push_simple(TokenKind kind, std::string text, SourceSpan span) {
        Token t;
        t.kind = kind;
        t.text = text;
        t.value = std::move(text);
        t.span = span;
        result_.tokens.push_back(std::move(t));
    }

    void error(std::string code, std::string message, SourceSpan span) {
        result_.diagnostics.push_back(
            {Diagnostic::Level::Error, std::move(code), std::move(message), span});
    }

    void lex_token() {
        const SourceSpan start = span_here(1);
        const char c = peek();

        if (is_ident_start(c)) {
            std::string text;
            while (!at_end() && is_ident_char(peek())) {
                text += peek();
                advance();
            }
            SourceSpan span = start;
            span.length = static_cast<int>(text.size());
            const bool is_level =
                text.size() == 2 && text[0] == 'L' && text[1] >= '0' && text[1] <= '5';
            push_simple(is_level ? TokenKind::Level : TokenKind::Identifier, std::move(text),
                        span);
            return;
        }

        if (c == '"') {
            lex_string(start);
            return;
        }

        switch (c) {
        case '{': advance(); push_simple(TokenKind::LBrace, "{", start); return;
        case '}': advance(); push_simple(TokenKind::RBrace, "}", start); return;
        case '[': advance(); push_simple(TokenKind::LBracket, "[", start); return;
        case ']': advance(); push_simple(TokenKind::RBracket, "]", start); return;
        case '(': advance(); push_simple(TokenKind::LParen, "(", start); return;
        case ')': advance(); push_simple(TokenKind::RParen, ")", start); return;
        case '=': advance(); push_simple(TokenKind::Equals, "=", start); return;
        case ';': advance(); push_simple(TokenKind::Semicolon, ";", start); return;
        case ',': advance(); push_simple(TokenKind::Comma, ",", start); return;
        case ':': advance(); push_simple(TokenKind::Colon, ":", start); return;
        case '&': advance(); push_simple(TokenKind::Amp, "&", start); return;
        case '|': advance(); push_simple(TokenKind::Pipe, "|", start); return;
        case '!': advance(); push_simple(TokenKind::Bang, "!", start); return;
        case '-':
            if (peek_next() == '>') {
                advance();
                advance();
                SourceSpan span = start;
                span.length = 2;
                push_simple(TokenKind::Arrow, "->", span);
                return;
            }
            break;
        default:
            break;
        }

        error("E001", std::string("unexpected character '") + c + "'", start);
        advance();
    }

    void lex_string(SourceSpan start) {
        advance();  // opening quote
        std::string raw = "\"";
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n') {
                error("E002", "unterminated string", start);
                return;
            }
            char c = peek();
            if (c == '"') {
                advance();
                raw += '"';
                break;
            }
            if (c == '\\') {
                const SourceSpan esc = span_here(2);
                advance();
                if (at_end() || peek() == '\n') {
                    error("E002", "unterminated string", start);
                    return;
                }
                char e = peek();
                if (e != '"' && e != '\\') {
                    error("E003", std::string("invalid escape sequence '\\") + e + "'", esc);
                }
                raw += '\\';
                raw += e;
                value += e;
                advance();
                continue;
            }
            raw += c;
            value += c;
            advance();
        }
        Token t;
        t.kind = TokenKind::String;
        t.text = std::move(raw);
        t.value = std::move(value);
        t.span = start;
        t.span.length = static_cast<int>(t.text.size());
        result_.tokens.push_back(std::move(t));
    }

    std::string_view source_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    TokenizeResult result_;
};

} // namespace

TokenizeResult tokenize(std::string_view source) {
    return Lexer(source).run();
}

} // namespace avrc
