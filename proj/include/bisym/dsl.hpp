#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bisym/binary_map.hpp"

namespace bisym::dsl {

// A small textual language for binary maps F(x,y):
//
//   map  := "piecewise" "{" case* "else" ":" expr "}" | "builtin" "(" name ")" | expr
//   case := "if" cond ":" expr ";"
//   cond := conj ("or" conj)* ; conj := atom ("and" atom)*
//   atom := expr cmp expr | ident "in" ivl | "(" cond ")"
//   ivl  := ("["|"(") expr "," expr ("]"|")"|"[")
//   cmp  := "<" | "<=" | ">" | ">=" | "=="
//   expr := arithmetic over x, y, numbers with + - * / ^, unary -,
//           and calls sqrt, exp, log, min, max, abs
//
// Precedence: ^  >  unary-  >  * /  >  + -  > comparisons > and > or;
// ^ is right-associative. A closing "[" spells a right-open interval, so
// both [a,b) and [a,b[ are accepted and normalized in the AST.

enum class TokKind { Number, Ident, Keyword, Op, Punct };

struct Token {
    TokKind kind;
    std::string lexeme;
    std::size_t begin; // byte offsets into the source
    std::size_t end;
};

/// Deterministic token stream; throws ParseError (lex_error) with the byte
/// offset of the offending character.
std::vector<Token> tokenize(std::string_view source);

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { VarX, VarY, Num, Neg, Add, Sub, Mul, Div, Pow, Call1, Call2 };
    Kind kind{};
    double num = 0.0;
    std::string fn; // sqrt, exp, log, abs / min, max
    ExprPtr a, b;
};

struct CondNode;
using CondPtr = std::shared_ptr<const CondNode>;

struct CondNode {
    enum class Kind { Cmp, In, And, Or };
    Kind kind{};
    std::string cmp; // <, <=, >, >=, ==
    ExprPtr lhs, rhs;
    char var = 0; // membership: 'x' or 'y'
    ExprPtr lo, hi;
    bool lo_closed = true, hi_closed = true;
    CondPtr ca, cb;
};

struct MapAst {
    struct Case {
        CondPtr cond;
        ExprPtr body;
    };
    std::vector<Case> cases;
    ExprPtr otherwise;        // set unless the AST is a builtin reference
    std::string builtin_name; // nonempty for the builtin(...) escape hatch

    bool is_builtin() const { return !builtin_name.empty(); }
};

/// Throws ParseError (syntax_error) with span, expected-token set and a
/// source snippet.
MapAst parse(std::string_view source);

/// Canonical text form; parse(pretty_print(ast)) reproduces the AST.
std::string pretty_print(const MapAst& ast);

bool expr_equal(const ExprNode& a, const ExprNode& b);
bool cond_equal(const CondNode& a, const CondNode& b);
bool ast_equal(const MapAst& a, const MapAst& b);

/// Compile to an evaluable map on the given domain. Guards are tested top to
/// bottom, first match wins; guard equality is exact floating comparison.
/// Division by zero and sqrt/log of invalid arguments surface lazily as
/// EvalError carrying the inputs.
BinaryMap compile(const MapAst& ast, const Interval& domain);
BinaryMap compile_source(std::string_view source, const Interval& domain);

} // namespace bisym::dsl
