#include "artifact/algexpr.hpp"

#include <cctype>
#include <utility>

namespace artifact::algexpr {

namespace {

Expr make(Op op, Expr lhs, Expr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Returns 0 at end of input.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (accept('+'))
                e = make(Op::Add, e, term());
            else if (accept('-'))
                e = make(Op::Sub, e, term());
            else
                return e;
        }
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            if (accept('*'))
                e = make(Op::Mul, e, factor());
            else if (accept('/'))
                e = make(Op::Div, e, factor());
            else
                return e;
        }
    }

    Expr factor() {
        if (accept('-'))
            return make(Op::Neg, factor());
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return integer();
        if (c == 's') {
            keyword("sqrt");
            expect('(');
            Expr e = expr();
            expect(')');
            return make(Op::Sqrt, e);
        }
        fail(pos_ < text_.size() ? "expected integer, 'sqrt', or '('"
                                 : "unexpected end of input");
    }

    Expr integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        auto n = std::make_shared<Node>();
        n->op = Op::Literal;
        n->literal = Integer(std::string(text_.substr(start, pos_ - start)));
        return n;
    }

    void keyword(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word)
            fail("expected integer, 'sqrt', or '('");
        pos_ += word.size();
    }
};

void render_to(const Expr& e, std::string& out);

// Parenthesize operands that would bind differently when re-parsed.
void render_operand(const Expr& e, std::string& out, bool needs_paren) {
    if (needs_paren) {
        out += '(';
        render_to(e, out);
        out += ')';
    } else {
        render_to(e, out);
    }
}

bool is_additive(const Expr& e) { return e->op == Op::Add || e->op == Op::Sub; }
bool is_binary(const Expr& e) { return is_additive(e) || e->op == Op::Mul || e->op == Op::Div; }

void render_to(const Expr& e, std::string& out) {
    switch (e->op) {
    case Op::Literal:
        out += e->literal.str();
        return;
    case Op::Add:
    case Op::Sub:
        render_to(e->lhs, out);
        out += (e->op == Op::Add) ? '+' : '-';
        // The right side of '-' must not re-parse as part of a longer sum,
        // and a leading unary minus there would fuse with the operator.
        render_operand(e->rhs, out,
                       (e->op == Op::Sub && is_additive(e->rhs)) || e->rhs->op == Op::Neg);
        return;
    case Op::Mul:
    case Op::Div:
        render_operand(e->lhs, out, is_additive(e->lhs));
        out += (e->op == Op::Mul) ? '*' : '/';
        render_operand(e->rhs, out,
                       is_binary(e->rhs) || (e->op == Op::Div && e->rhs->op == Op::Neg));
        return;
    case Op::Neg:
        out += '-';
        render_operand(e->lhs, out, is_binary(e->lhs));
        return;
    case Op::Sqrt:
        out += "sqrt(";
        render_to(e->lhs, out);
        out += ')';
        return;
    }
}

} // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

real eval(const Expr& expr) {
    switch (expr->op) {
    case Op::Literal:
        return real(expr->literal);
    case Op::Add:
        return eval(expr->lhs) + eval(expr->rhs);
    case Op::Sub:
        return eval(expr->lhs) - eval(expr->rhs);
    case Op::Mul:
        return eval(expr->lhs) * eval(expr->rhs);
    case Op::Div: {
        real d = eval(expr->rhs);
        if (d == 0)
            throw DomainError("division by zero in expression");
        return eval(expr->lhs) / d;
    }
    case Op::Neg:
        return -eval(expr->lhs);
    case Op::Sqrt: {
        real v = eval(expr->lhs);
        if (v < 0)
            throw DomainError("square root of negative value in expression");
        return sqrt(v);
    }
    }
    throw Error("corrupt expression node");
}

real eval(std::string_view text) { return eval(parse(text)); }

std::string render(const Expr& expr) {
    std::string out;
    render_to(expr, out);
    return out;
}

Expr literal(const Integer& value) {
    if (value < 0) {
        auto n = std::make_shared<Node>();
        n->op = Op::Literal;
        n->literal = -value;
        return make(Op::Neg, n);
    }
    auto n = std::make_shared<Node>();
    n->op = Op::Literal;
    n->literal = value;
    return n;
}

Expr rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den == 1)
        return literal(num);
    return make(Op::Div, literal(num), literal(den));
}

} // namespace artifact::algexpr
