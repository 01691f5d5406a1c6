#include "rectifynd/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace rectifynd {

struct Expression::Node {
    enum class Op { Number, Variable, Add, Sub, Mul, Div, Neg, PowInt, Sin, Cos, Tan, Sec, Sqrt };
    Op op;
    double number = 0.0;
    int exponent = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw SchemaError("expression parse error at offset " + std::to_string(pos_) + ": " + msg +
                          " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            if (eat('+')) lhs = make(Node::Op::Add, lhs, term());
            else if (eat('-')) lhs = make(Node::Op::Sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (true) {
            if (eat('*')) lhs = make(Node::Op::Mul, lhs, factor());
            else if (eat('/')) lhs = make(Node::Op::Div, lhs, factor());
            else return lhs;
        }
    }

    NodePtr factor() {
        NodePtr base = unary();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected integer exponent after '^'");
            int e = std::atoi(s_.substr(start, pos_ - start).c_str());
            if (neg) fail("negative exponents are not supported; use 1/x^k");
            auto n = make(Node::Op::PowInt, base);
            const_cast<Node*>(n.get())->exponent = e;
            return n;
        }
        return base;
    }

    NodePtr unary() {
        if (eat('-')) return make(Node::Op::Neg, unary());
        return primary();
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            double v = std::strtod(s_.c_str() + pos_, &end);
            pos_ = static_cast<size_t>(end - s_.c_str());
            auto n = make(Node::Op::Number);
            const_cast<Node*>(n.get())->number = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "t") return make(Node::Op::Variable);
            if (name == "pi") {
                auto n = make(Node::Op::Number);
                const_cast<Node*>(n.get())->number = M_PI;
                return n;
            }
            Node::Op op;
            if (name == "sin") op = Node::Op::Sin;
            else if (name == "cos") op = Node::Op::Cos;
            else if (name == "tan") op = Node::Op::Tan;
            else if (name == "sec") op = Node::Op::Sec;
            else if (name == "sqrt") op = Node::Op::Sqrt;
            else fail("unknown identifier '" + name + "'");
            if (!eat('(')) fail("expected '(' after function name");
            NodePtr arg = expr();
            if (!eat(')')) fail("expected ')'");
            return make(op, arg);
        }
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

Jet eval_node(const Node& n, double t, int order) {
    switch (n.op) {
        case Node::Op::Number: return Jet::constant(n.number, order, t);
        case Node::Op::Variable: return Jet::variable(t, order);
        case Node::Op::Add: return eval_node(*n.a, t, order) + eval_node(*n.b, t, order);
        case Node::Op::Sub: return eval_node(*n.a, t, order) - eval_node(*n.b, t, order);
        case Node::Op::Mul: return eval_node(*n.a, t, order) * eval_node(*n.b, t, order);
        case Node::Op::Div: {
            Jet d = eval_node(*n.b, t, order);
            if (std::fabs(d.value()) <= kEpsDiv)
                throw DomainError("expression divides by a value near zero at t = " + std::to_string(t));
            return eval_node(*n.a, t, order) * reciprocal(d);
        }
        case Node::Op::Neg: return -eval_node(*n.a, t, order);
        case Node::Op::PowInt: return jet_powi(eval_node(*n.a, t, order), n.exponent);
        case Node::Op::Sin: return jet_sin(eval_node(*n.a, t, order));
        case Node::Op::Cos: return jet_cos(eval_node(*n.a, t, order));
        case Node::Op::Tan: return jet_tan(eval_node(*n.a, t, order));
        case Node::Op::Sec: return jet_sec(eval_node(*n.a, t, order));
        case Node::Op::Sqrt: return jet_sqrt(eval_node(*n.a, t, order));
    }
    throw DomainError("unreachable expression node");
}

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.node_ = Parser(text).run();
    e.text_ = text;
    return e;
}

Jet Expression::evaluate(double t, int order) const {
    if (!node_) throw SchemaError("evaluating an empty expression");
    return eval_node(*node_, t, order);
}

} // namespace rectifynd
