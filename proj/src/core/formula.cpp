#include "core/formula.hpp"

#include "core/errors.hpp"

#include <utility>

namespace avrc {

FormulaPtr Formula::constant(bool value) {
    auto node = std::make_shared<Formula>();
    node->kind_ = Kind::Const;
    node->value_ = value;
    return node;
}

FormulaPtr Formula::variable(std::string name) {
    auto node = std::make_shared<Formula>();
    node->kind_ = Kind::Var;
    node->name_ = std::move(name);
    return node;
}

FormulaPtr Formula::negation(FormulaPtr arg) {
    auto node = std::make_shared<Formula>();
    node->kind_ = Kind::Not;
    node->lhs_ = std::move(arg);
    return node;
}

FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
    auto node = std::make_shared<Formula>();
    node->kind_ = Kind::And;
    node->lhs_ = std::move(lhs);
    node->rhs_ = std::move(rhs);
    return node;
}

FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
    auto node = std::make_shared<Formula>();
    node->kind_ = Kind::Or;
    node->lhs_ = std::move(lhs);
    node->rhs_ = std::move(rhs);
    return node;
}

bool evaluate(const Formula& formula, const std::map<std::string, bool>& binding) {
    switch (formula.kind()) {
    case Formula::Kind::Const:
        return formula.value();
    case Formula::Kind::Var: {
        auto it = binding.find(formula.name());
        if (it == binding.end()) {
            throw Error(ErrorCode::UnboundVariable,
                        "unbound variable '" + formula.name() + "' in prevention formula");
        }
        return it->second;
    }
    case Formula::Kind::Not:
        return !evaluate(*formula.lhs(), binding);
    case Formula::Kind::And:
        return evaluate(*formula.lhs(), binding) && evaluate(*formula.rhs(), binding);
    case Formula::Kind::Or:
        return evaluate(*formula.lhs(), binding) || evaluate(*formula.rhs(), binding);
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt formula node");
}

namespace {

void collect(const Formula& formula, std::set<std::string>& out) {
    switch (formula.kind()) {
    case Formula::Kind::Const:
        return;
    case Formula::Kind::Var:
        out.insert(formula.name());
        return;
    case Formula::Kind::Not:
        collect(*formula.lhs(), out);
        return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
        collect(*formula.lhs(), out);
        collect(*formula.rhs(), out);
        return;
    }
}

// Higher binds tighter: or < and < not < atom.
int precedence(Formula::Kind kind) {
    switch (kind) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
    }
}

void print(const Formula& formula, std::string& out) {
    const int self = precedence(formula.kind());
    auto child = [&](const Formula& c, bool needs_parens) {
        if (needs_parens) {
            out += '(';
            print(c, out);
            out += ')';
        } else {
            print(c, out);
        }
    };
    switch (formula.kind()) {
    case Formula::Kind::Const:
        out += formula.value() ? "true" : "false";
        return;
    case Formula::Kind::Var:
        out += formula.name();
        return;
    case Formula::Kind::Not:
        out += '!';
        child(*formula.lhs(), precedence(formula.lhs()->kind()) < self);
        return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        // Left-associative grammar: a right child at the same precedence
        // needs parentheses to keep the tree shape on reparse.
        const char* op = formula.kind() == Formula::Kind::And ? " & " : " | ";
        child(*formula.lhs(), precedence(formula.lhs()->kind()) < self);
        out += op;
        child(*formula.rhs(), precedence(formula.rhs()->kind()) <= self);
        return;
    }
    }
}

} // namespace

std::set<std::string> formula_variables(const Formula& formula) {
    std::set<std::string> out;
    collect(formula, out);
    return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::Const:
        return a.value() == b.value();
    case Formula::Kind::Var:
        return a.name() == b.name();
    case Formula::Kind::Not:
        return structurally_equal(*a.lhs(), *b.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
        return structurally_equal(*a.lhs(), *b.lhs()) &&
               structurally_equal(*a.rhs(), *b.rhs());
    }
    return false;
}

bool negation_free(const Formula& formula) {
    switch (formula.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var:
        return true;
    case Formula::Kind::Not:
        return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
        return negation_free(*formula.lhs()) && negation_free(*formula.rhs());
    }
    return false;
}

std::string formula_to_source(const Formula& formula) {
    std::string out;
    print(formula, out);
    return out;
}

} // namespace avrc
