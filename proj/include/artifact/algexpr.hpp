#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "artifact/error.hpp"
#include "artifact/real.hpp"

namespace artifact::algexpr {

using Integer = boost::multiprecision::cpp_int;

enum class Op { Literal, Add, Sub, Mul, Div, Neg, Sqrt };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    Op op = Op::Literal;
    Integer literal;   // Op::Literal only
    Expr lhs, rhs;     // rhs unused for Neg and Sqrt
};

struct ParseError : FormatError {
    using FormatError::FormatError;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] ( integer | 'sqrt' '(' expr ')' | '(' expr ')' )
// Whitespace is ignored between tokens; there is no implicit multiplication.
Expr parse(std::string_view text);

// Evaluates at the current global precision. Division by zero and square
// roots of negative values raise DomainError.
real eval(const Expr& expr);
real eval(std::string_view text);

// Canonical text form; parse(render(e)) evaluates identically to e.
// Emits no whitespace.
std::string render(const Expr& expr);

Expr literal(const Integer& value);
Expr rational(const Integer& num, const Integer& den);

} // namespace artifact::algexpr
