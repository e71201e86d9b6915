#include "core/parser.hpp"

#include "core/lexer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace avrc {

namespace {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Level: return "automation level";
    case TokenKind::String: return "string";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::EndOfInput: return "end of input";
    }
    return "token";
}

// Unwinds to parse_case() after the first syntax error; semantic checks
// run afterwards and may report several violations at once.
struct SyntaxAbort {};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic> diagnostics)
        : tokens_(std::move(tokens)), diagnostics_(std::move(diagnostics)) {}

    ParseResult run() {
        ParseResult result;
        try {
            Case parsed = parse_file();
            attach_validation(parsed);
            if (!has_errors(diagnostics_)) {
                result.parsed = std::move(parsed);
            }
        } catch (const SyntaxAbort&) {
            // diagnostics already recorded
        }
        result.diagnostics = std::move(diagnostics_);
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& advance() { return tokens_[pos_++]; }

    bool at(TokenKind kind) const { return peek().kind == kind; }

    bool at_word(std::string_view word) const {
        return peek().kind == TokenKind::Identifier && peek().text == word;
    }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::EndOfInput
                                ? std::string("end of input")
                                : "'" + t.text + "'";
        error("E100", "expected " + expected + ", found " + found, t.span);
        throw SyntaxAbort{};
    }

    void error(std::string code, std::string message, SourceSpan span) {
        diagnostics_.push_back(
            {Diagnostic::Level::Error, std::move(code), std::move(message), span});
    }

    const Token& expect(TokenKind kind) {
        if (!at(kind)) fail(token_kind_name(kind));
        return advance();
    }

    const Token& expect_word(std::string_view word) {
        if (!at_word(word)) fail("'" + std::string(word) + "'");
        return advance();
    }

    bool match_word(std::string_view word) {
        if (at_word(word)) {
            advance();
            return true;
        }
        return false;
    }

    void remember(std::string locus, SourceSpan span) {
        spans_.emplace(std::move(locus), span);
    }

    // ---- grammar ----

    Case parse_file() {
        Case c;
        const Token& kw = expect_word("case");
        case_span_ = kw.span;
        c.id = expect(TokenKind::String).value;
        expect(TokenKind::LBrace);

        if (at_word("title")) {
            advance();
            expect(TokenKind::Equals);
            c.title = expect(TokenKind::String).value;
            expect(TokenKind::Semicolon);
        }
        if (at_word("verdict")) {
            advance();
            expect(TokenKind::Equals);
            c.verdict = expect(TokenKind::String).value;
            expect(TokenKind::Semicolon);
        }

        expect_word("automation_level");
        expect(TokenKind::Equals);
        const Token& level = expect(TokenKind::Level);
        c.automation = *automation_from_keyword(level.text);
        expect(TokenKind::Semicolon);

        parse_subjects(c);
        parse_accident_types(c);
        if (at_word("registry")) parse_registry(c);
        parse_events(c);
        parse_chain(c);
        parse_prevention(c);

        expect(TokenKind::RBrace);
        expect(TokenKind::EndOfInput);
        return c;
    }

    void parse_subjects(Case& c) {
        remember("subjects", expect_word("subjects").span);
        expect(TokenKind::LBrace);
        while (!at(TokenKind::RBrace)) {
            Subject s;
            const Token& role = expect(TokenKind::Identifier);
            auto parsed_role = role_from_keyword(role.text);
            if (!parsed_role) {
                error("E100",
                      "expected subject role ('manufacturer', 'driver' or 'third_party'), found '" +
                          role.text + "'",
                      role.span);
                throw SyntaxAbort{};
            }
            s.role = *parsed_role;
            const Token& id = expect(TokenKind::Identifier);
            s.id = id.text;
            remember("subject:" + s.id, id.span);
            s.label = expect(TokenKind::String).value;
            expect(TokenKind::Semicolon);
            c.subjects.push_back(std::move(s));
        }
        expect(TokenKind::RBrace);
    }

    void parse_accident_types(Case& c) {
        remember("accident_types", expect_word("accident_types").span);
        expect(TokenKind::Equals);
        expect(TokenKind::LBracket);
        while (!at(TokenKind::RBracket)) {
            const Token& t = expect(TokenKind::Identifier);
            auto kind = accident_type_from_keyword(t.text);
            if (!kind) {
                error("E100", "unknown accident type '" + t.text + "'", t.span);
                throw SyntaxAbort{};
            }
            c.accident_types.insert(*kind);
            if (!at(TokenKind::RBracket)) expect(TokenKind::Comma);
        }
        expect(TokenKind::RBracket);
        expect(TokenKind::Semicolon);
    }

    void parse_registry(Case& c) {
        remember("registry", expect_word("registry").span);
        expect(TokenKind::Equals);
        expect(TokenKind::LBracket);
        std::vector<std::string> names;
        while (!at(TokenKind::RBracket)) {
            names.push_back(expect(TokenKind::Identifier).text);
            if (!at(TokenKind::RBracket)) expect(TokenKind::Comma);
        }
        expect(TokenKind::RBracket);
        expect(TokenKind::Semicolon);
        c.registry = FactorRegistry(std::move(names));
    }

    void parse_events(Case& c) {
        expect_word("events");
        expect(TokenKind::LBrace);
        while (!at(TokenKind::RBrace)) {
            c.events.push_back(parse_event(c, static_cast<int>(c.events.size())));
        }
        expect(TokenKind::RBrace);
    }

    RiskEvent parse_event(Case&, int sequence) {
        RiskEvent e;
        e.sequence = sequence;
        expect_word("event");
        const Token& id = expect(TokenKind::Identifier);
        e.id = id.text;
        remember("event:" + e.id, id.span);
        e.description = expect(TokenKind::String).value;
        expect(TokenKind::LBrace);

        expect_word("subject");
        expect(TokenKind::Equals);
        const Token& subject = expect(TokenKind::Identifier);
        e.subject = subject.text;
        remember("event:" + e.id + ":subject", subject.span);
        expect(TokenKind::Semicolon);

        expect_word("layer");
        expect(TokenKind::Equals);
        const Token& layer = expect(TokenKind::Identifier);
        auto parsed_layer = layer_from_keyword(layer.text);
        if (!parsed_layer) {
            error("E100", "unknown layer '" + layer.text + "'", layer.span);
            throw SyntaxAbort{};
        }
        e.layer = *parsed_layer;
        remember("event:" + e.id + ":layer", layer.span);
        expect(TokenKind::Semicolon);

        remember("event:" + e.id + ":factors", expect_word("factors").span);
        expect(TokenKind::Equals);
        expect(TokenKind::LBracket);
        while (!at(TokenKind::RBracket)) {
            Factor f;
            const Token& category = expect(TokenKind::Identifier);
            f.category = category.text;
            remember("event:" + e.id + ":factor:" + f.category, category.span);
            expect(TokenKind::Colon);
            const Token& severity = expect(TokenKind::Identifier);
            auto parsed_severity = severity_from_keyword(severity.text);
            if (!parsed_severity) {
                error("E100", "unknown severity '" + severity.text + "'", severity.span);
                throw SyntaxAbort{};
            }
            f.severity = *parsed_severity;
            if (at(TokenKind::String)) f.note = advance().value;
            e.factors.push_back(std::move(f));
            if (!at(TokenKind::RBracket)) expect(TokenKind::Comma);
        }
        expect(TokenKind::RBracket);
        expect(TokenKind::Semicolon);

        expect_word("kind");
        expect(TokenKind::Equals);
        const Token& kind = expect(TokenKind::Identifier);
        auto parsed_kind = kind_from_keyword(kind.text);
        if (!parsed_kind) {
            error("E100", "expected 'inevitable' or 'coincidental', found '" + kind.text + "'",
                  kind.span);
            throw SyntaxAbort{};
        }
        e.kind = *parsed_kind;
        expect(TokenKind::Semicolon);

        expect_word("var");
        expect(TokenKind::Equals);
        const Token& variable = expect(TokenKind::Identifier);
        e.variable = variable.text;
        remember("event:" + e.id + ":var", variable.span);
        expect(TokenKind::Semicolon);

        if (match_word("occurred")) {
            expect(TokenKind::Equals);
            e.occurred_label = expect(TokenKind::String).value;
            expect(TokenKind::Semicolon);
        }
        if (match_word("averted")) {
            expect(TokenKind::Equals);
            e.averted_label = expect(TokenKind::String).value;
            expect(TokenKind::Semicolon);
        }

        expect(TokenKind::RBrace);
        return e;
    }

    void parse_chain(Case& c) {
        expect_word("chain");
        expect(TokenKind::LBrace);
        while (!at(TokenKind::RBrace)) {
            ChainEdge edge;
            const Token& from = expect(TokenKind::Identifier);
            edge.from = from.text;
            expect(TokenKind::Arrow);
            edge.to = expect(TokenKind::Identifier).text;
            expect(TokenKind::Semicolon);
            remember("edge:" + std::to_string(c.chain_edges.size()), from.span);
            c.chain_edges.push_back(std::move(edge));
        }
        expect(TokenKind::RBrace);
    }

    void parse_prevention(Case& c) {
        remember("prevention", expect_word("prevention").span);
        expect(TokenKind::Equals);
        c.prevention = parse_or();
        expect(TokenKind::Semicolon);
    }

    // formula := or; or := and {'|' and}; and := unary {'&' unary};
    // unary := '!' unary | atom; atom := true | false | ident | '(' formula ')'
    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (at(TokenKind::Pipe)) {
            advance();
            lhs = Formula::disjunction(std::move(lhs), parse_and());
        }
        return lhs;
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_unary();
        while (at(TokenKind::Amp)) {
            advance();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    FormulaPtr parse_unary() {
        if (at(TokenKind::Bang)) {
            advance();
            return Formula::negation(parse_unary());
        }
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        if (at(TokenKind::LParen)) {
            advance();
            FormulaPtr inner = parse_or();
            expect(TokenKind::RParen);
            return inner;
        }
        if (at(TokenKind::Identifier)) {
            const Token& t = advance();
            if (t.text == "true") return Formula::constant(true);
            if (t.text == "false") return Formula::constant(false);
            spans_.emplace("prevention:" + t.text, t.span);  // first occurrence wins
            return Formula::variable(t.text);
        }
        fail("a formula atom ('true', 'false', a variable or '(')");
    }

    // ---- semantics ----

    SourceSpan locus_span(const std::string& locus) const {
        auto it = spans_.find(locus);
        if (it != spans_.end()) return it->second;
        // fall back to the enclosing construct, then to the case keyword
        auto colon = locus.rfind(':');
        if (colon != std::string::npos) {
            return locus_span(locus.substr(0, colon));
        }
        return case_span_;
    }

    void attach_validation(Case& c) {
        const ValidationResult validation = validate_case(c);
        for (const auto& v : validation.violations) {
            error(v.code, v.message, locus_span(v.locus));
        }
        if (!has_errors(diagnostics_)) {
            normalize(c);
        }
    }

    // Canonical factor order inside each event: registry order, authored
    // order among duplicates.
    void normalize(Case& c) {
        for (auto& e : c.events) {
            std::stable_sort(e.factors.begin(), e.factors.end(),
                             [&](const Factor& a, const Factor& b) {
                                 return c.registry.index_of(a.category) <
                                        c.registry.index_of(b.category);
                             });
        }
    }

    std::vector<Token> tokens_;
    std::vector<Diagnostic> diagnostics_;
    std::size_t pos_ = 0;
    std::map<std::string, SourceSpan> spans_;
    SourceSpan case_span_{1, 1, 1};
};

} // namespace

ParseResult parse_case(std::string_view source) {
    TokenizeResult lexed = tokenize(source);
    if (!lexed.ok()) {
        ParseResult result;
        result.diagnostics = std::move(lexed.diagnostics);
        return result;
    }
    return Parser(std::move(lexed.tokens), std::move(lexed.diagnostics)).run();
}

} // namespace avrc
