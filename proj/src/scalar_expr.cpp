#include "volterra/scalar_expr.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

struct ScalarExprNode {
    enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, IntPow, Sin, Cos, Exp };

    Kind kind;
    double number = 0;
    long long exponent = 0;
    std::shared_ptr<const ScalarExprNode> a;
    std::shared_ptr<const ScalarExprNode> b;
};

namespace {

using NodePtr = std::shared_ptr<const ScalarExprNode>;
using Kind = ScalarExprNode::Kind;

NodePtr make(Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<ScalarExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double eval_node(const ScalarExprNode& n, double x) {
    switch (n.kind) {
    case Kind::Number: return n.number;
    case Kind::Variable: return x;
    case Kind::Negate: return -eval_node(*n.a, x);
    case Kind::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case Kind::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case Kind::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case Kind::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
    case Kind::IntPow: {
        const double base = eval_node(*n.a, x);
        long long e = n.exponent < 0 ? -n.exponent : n.exponent;
        double acc = 1.0, p = base;
        for (; e > 0; e >>= 1, p *= p)
            if (e & 1) acc *= p;
        return n.exponent < 0 ? 1.0 / acc : acc;
    }
    case Kind::Sin: return std::sin(eval_node(*n.a, x));
    case Kind::Cos: return std::cos(eval_node(*n.a, x));
    case Kind::Exp: return std::exp(eval_node(*n.a, x));
    }
    return 0;
}

bool ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ascii_digit(char c) {
    return c >= '0' && c <= '9';
}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    NodePtr run() {
        skip_space();
        NodePtr n = parse_sum();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(1, static_cast<int>(pos_) + 1, msg);
    }

    void skip_space() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool take(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    NodePtr parse_sum() {
        NodePtr n = parse_product();
        for (;;) {
            if (take('+')) n = make(Kind::Add, n, parse_product());
            else if (take('-')) n = make(Kind::Sub, n, parse_product());
            else return n;
        }
    }

    NodePtr parse_product() {
        NodePtr n = parse_unary();
        for (;;) {
            if (take('*')) n = make(Kind::Mul, n, parse_unary());
            else if (take('/')) n = make(Kind::Div, n, parse_unary());
            else return n;
        }
    }

    NodePtr parse_unary() {
        if (take('-')) return make(Kind::Negate, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (!take('^')) return base;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!ascii_digit(peek())) fail("expected an integer exponent");
        long long e = 0;
        while (ascii_digit(peek())) {
            e = e * 10 + (peek() - '0');
            if (e > 1024) fail("exponent out of range");
            ++pos_;
        }
        auto n = std::make_shared<ScalarExprNode>();
        n->kind = Kind::IntPow;
        n->exponent = negative ? -e : e;
        n->a = std::move(base);
        return n;
    }

    NodePtr parse_primary() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr n = parse_sum();
            if (!take(')')) fail("expected ')'");
            return n;
        }
        if (ascii_digit(c) || c == '.') return parse_number();
        if (ascii_letter(c)) {
            std::size_t q = pos_;
            while (q < src_.size() && (ascii_letter(src_[q]) || ascii_digit(src_[q]))) ++q;
            const std::string name(src_.substr(pos_, q - pos_));
            pos_ = q;
            if (name == "x") return make(Kind::Variable);
            Kind kind;
            if (name == "sin") kind = Kind::Sin;
            else if (name == "cos") kind = Kind::Cos;
            else if (name == "exp") kind = Kind::Exp;
            else fail("unknown name '" + name + "' (expected x, sin, cos, or exp)");
            if (!take('(')) fail("expected '(' after '" + name + "'");
            NodePtr arg = parse_sum();
            if (!take(')')) fail("expected ')'");
            return make(kind, std::move(arg));
        }
        fail(c == '\0' ? "unexpected end of expression"
                       : "unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (ascii_digit(peek())) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (ascii_digit(peek())) ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t q = pos_ + 1;
            if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
            if (q < src_.size() && ascii_digit(src_[q])) {
                pos_ = q;
                while (ascii_digit(peek())) ++pos_;
            }
        }
        const std::string text(src_.substr(start, pos_ - start));
        if (text.empty() || text == ".") fail("malformed number");
        auto n = std::make_shared<ScalarExprNode>();
        n->kind = Kind::Number;
        n->number = std::strtod(text.c_str(), nullptr);
        return n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace

ScalarExpr ScalarExpr::parse(std::string_view src) {
    return ScalarExpr(ExprParser(src).run(), std::string(src));
}

double ScalarExpr::operator()(double x) const {
    return eval_node(*root_, x);
}

} // namespace volterra
