#pragma once

#include <memory>
#include <string>

#include "rectifynd/jet.hpp"

namespace rectifynd {

/// A coordinate function of one variable t, parsed from a small arithmetic
/// grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := unary ('^' integer)?
///   unary  := '-'* primary
///   primary:= number | 't' | 'pi' | func '(' expr ')' | '(' expr ')'
///   func   := sin | cos | tan | sec | sqrt
///
/// Evaluation produces exact jets of the expression at a parameter value.
class Expression {
public:
    Expression() = default;
    static Expression parse(const std::string& text);

    Jet evaluate(double t, int order) const;
    const std::string& text() const noexcept { return text_; }
    bool empty() const noexcept { return node_ == nullptr; }

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    std::string text_;
};

} // namespace rectifynd
