#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

namespace avrc {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Boolean prevention formula over averted-risk variables. A variable is
// true when the corresponding risk was averted; the formula is true when
// the accident could possibly have been avoided. Nodes are immutable and
// shared freely.
class Formula {
public:
    enum class Kind { Const, Var, Not, And, Or };

    static FormulaPtr constant(bool value);
    static FormulaPtr variable(std::string name);
    static FormulaPtr negation(FormulaPtr arg);
    static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);

    Kind kind() const { return kind_; }
    bool value() const { return value_; }              // Const
    const std::string& name() const { return name_; }  // Var
    const FormulaPtr& lhs() const { return lhs_; }     // Not/And/Or (Not: arg)
    const FormulaPtr& rhs() const { return rhs_; }     // And/Or

private:
    Kind kind_ = Kind::Const;
    bool value_ = false;
    std::string name_;
    FormulaPtr lhs_;
    FormulaPtr rhs_;
};

// Throws Error{UnboundVariable} if the binding misses a referenced variable.
bool evaluate(const Formula& formula, const std::map<std::string, bool>& binding);

std::set<std::string> formula_variables(const Formula& formula);

bool structurally_equal(const Formula& a, const Formula& b);

// No Not node anywhere in the tree.
bool negation_free(const Formula& formula);

// Source form with minimal parentheses; parsing it back yields a
// structurally equal tree.
std::string formula_to_source(const Formula& formula);

} // namespace avrc
