#include <cstdio>

#include "bisym/dsl.hpp"

namespace bisym::dsl {

namespace {

// precedence: + - (1)  * / (2)  unary- (3)  ^ (4)  atoms (5)
int expr_prec(const ExprNode& e) {
    switch (e.kind) {
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: return 1;
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Div: return 2;
    case ExprNode::Kind::Neg: return 3;
    case ExprNode::Kind::Pow: return 4;
    default: return 5;
    }
}

std::string number_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_expr(std::string& out, const ExprNode& e, int min_prec) {
    const int prec = expr_prec(e);
    const bool paren = prec < min_prec;
    if (paren)
        out += '(';
    switch (e.kind) {
    case ExprNode::Kind::VarX: out += 'x'; break;
    case ExprNode::Kind::VarY: out += 'y'; break;
    case ExprNode::Kind::Num: out += number_text(e.num); break;
    case ExprNode::Kind::Neg:
        out += '-';
        print_expr(out, *e.a, 3);
        break;
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub:
        print_expr(out, *e.a, 1);
        out += e.kind == ExprNode::Kind::Add ? " + " : " - ";
        print_expr(out, *e.b, 2);
        break;
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Div:
        print_expr(out, *e.a, 2);
        out += e.kind == ExprNode::Kind::Mul ? "*" : "/";
        print_expr(out, *e.b, 3);
        break;
    case ExprNode::Kind::Pow:
        print_expr(out, *e.a, 5);
        out += '^';
        print_expr(out, *e.b, 3);
        break;
    case ExprNode::Kind::Call1:
        out += e.fn;
        out += '(';
        print_expr(out, *e.a, 0);
        out += ')';
        break;
    case ExprNode::Kind::Call2:
        out += e.fn;
        out += '(';
        print_expr(out, *e.a, 0);
        out += ", ";
        print_expr(out, *e.b, 0);
        out += ')';
        break;
    }
    if (paren)
        out += ')';
}

// or (1), and (2), atoms (3)
int cond_prec(const CondNode& c) {
    switch (c.kind) {
    case CondNode::Kind::Or: return 1;
    case CondNode::Kind::And: return 2;
    default: return 3;
    }
}

void print_cond(std::string& out, const CondNode& c, int min_prec) {
    const int prec = cond_prec(c);
    const bool paren = prec < min_prec;
    if (paren)
        out += '(';
    switch (c.kind) {
    case CondNode::Kind::Or:
        print_cond(out, *c.ca, 1);
        out += " or ";
        print_cond(out, *c.cb, 2);
        break;
    case CondNode::Kind::And:
        print_cond(out, *c.ca, 2);
        out += " and ";
        print_cond(out, *c.cb, 3);
        break;
    case CondNode::Kind::Cmp:
        print_expr(out, *c.lhs, 0);
        out += ' ';
        out += c.cmp;
        out += ' ';
        print_expr(out, *c.rhs, 0);
        break;
    case CondNode::Kind::In:
        out += c.var;
        out += " in ";
        out += c.lo_closed ? '[' : '(';
        print_expr(out, *c.lo, 0);
        out += ", ";
        print_expr(out, *c.hi, 0);
        out += c.hi_closed ? ']' : ')';
        break;
    }
    if (paren)
        out += ')';
}

} // namespace

std::string pretty_print(const MapAst& ast) {
    if (ast.is_builtin())
        return "builtin(" + ast.builtin_name + ")";
    std::string out;
    if (ast.cases.empty()) {
        print_expr(out, *ast.otherwise, 0);
        return out;
    }
    out += "piecewise { ";
    for (const auto& c : ast.cases) {
        out += "if ";
        print_cond(out, *c.cond, 0);
        out += ": ";
        print_expr(out, *c.body, 0);
        out += "; ";
    }
    out += "else: ";
    print_expr(out, *ast.otherwise, 0);
    out += " }";
    return out;
}

bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case ExprNode::Kind::VarX:
    case ExprNode::Kind::VarY: return true;
    case ExprNode::Kind::Num: return a.num == b.num;
    case ExprNode::Kind::Neg: return expr_equal(*a.a, *b.a);
    case ExprNode::Kind::Call1: return a.fn == b.fn && expr_equal(*a.a, *b.a);
    case ExprNode::Kind::Call2:
        return a.fn == b.fn && expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
    default: return expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
    }
}

bool cond_equal(const CondNode& a, const CondNode& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case CondNode::Kind::Cmp:
        return a.cmp == b.cmp && expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    case CondNode::Kind::In:
        return a.var == b.var && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed &&
               expr_equal(*a.lo, *b.lo) && expr_equal(*a.hi, *b.hi);
    default: return cond_equal(*a.ca, *b.ca) && cond_equal(*a.cb, *b.cb);
    }
}

bool ast_equal(const MapAst& a, const MapAst& b) {
    if (a.builtin_name != b.builtin_name)
        return false;
    if (a.is_builtin())
        return true;
    if (a.cases.size() != b.cases.size())
        return false;
    for (std::size_t i = 0; i < a.cases.size(); ++i)
        if (!cond_equal(*a.cases[i].cond, *b.cases[i].cond) ||
            !expr_equal(*a.cases[i].body, *b.cases[i].body))
            return false;
    return expr_equal(*a.otherwise, *b.otherwise);
}

} // namespace bisym::dsl
