#include <cmath>

#include "bisym/builtins.hpp"
#include "bisym/dsl.hpp"

namespace bisym::dsl {

namespace {

double eval_expr(const ExprNode& e, double x, double y) {
    switch (e.kind) {
    case ExprNode::Kind::VarX: return x;
    case ExprNode::Kind::VarY: return y;
    case ExprNode::Kind::Num: return e.num;
    case ExprNode::Kind::Neg: return -eval_expr(*e.a, x, y);
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub:
    case ExprNode::Kind::Mul: {
        double a = eval_expr(*e.a, x, y), b = eval_expr(*e.b, x, y);
        double r = e.kind == ExprNode::Kind::Add   ? a + b
                   : e.kind == ExprNode::Kind::Sub ? a - b
                                                   : a * b;
        if (!std::isfinite(r))
            throw EvalError("arithmetic overflow", x, y);
        return r;
    }
    case ExprNode::Kind::Div: {
        double a = eval_expr(*e.a, x, y), b = eval_expr(*e.b, x, y);
        if (b == 0.0)
            throw EvalError("division by zero", x, y);
        double r = a / b;
        if (!std::isfinite(r))
            throw EvalError("non-finite quotient", x, y);
        return r;
    }
    case ExprNode::Kind::Pow: {
        double a = eval_expr(*e.a, x, y), b = eval_expr(*e.b, x, y);
        double r = std::pow(a, b);
        if (!std::isfinite(r))
            throw EvalError("non-finite power", x, y);
        return r;
    }
    case ExprNode::Kind::Call1: {
        double a = eval_expr(*e.a, x, y);
        if (e.fn == "sqrt") {
            if (a < 0.0)
                throw EvalError("sqrt of a negative argument", x, y);
            return std::sqrt(a);
        }
        if (e.fn == "log") {
            if (a <= 0.0)
                throw EvalError("log of a non-positive argument", x, y);
            return std::log(a);
        }
        if (e.fn == "exp") {
            double r = std::exp(a);
            if (!std::isfinite(r))
                throw EvalError("exp overflow", x, y);
            return r;
        }
        return std::abs(a); // abs
    }
    case ExprNode::Kind::Call2: {
        double a = eval_expr(*e.a, x, y), b = eval_expr(*e.b, x, y);
        return e.fn == "min" ? std::min(a, b) : std::max(a, b);
    }
    }
    throw EvalError("corrupt expression node", x, y);
}

bool eval_cond(const CondNode& c, double x, double y) {
    switch (c.kind) {
    case CondNode::Kind::And: return eval_cond(*c.ca, x, y) && eval_cond(*c.cb, x, y);
    case CondNode::Kind::Or: return eval_cond(*c.ca, x, y) || eval_cond(*c.cb, x, y);
    case CondNode::Kind::Cmp: {
        double a = eval_expr(*c.lhs, x, y), b = eval_expr(*c.rhs, x, y);
        if (c.cmp == "<")
            return a < b;
        if (c.cmp == "<=")
            return a <= b;
        if (c.cmp == ">")
            return a > b;
        if (c.cmp == ">=")
            return a >= b;
        return a == b; // guard equality is exact by design
    }
    case CondNode::Kind::In: {
        double v = c.var == 'x' ? x : y;
        double lo = eval_expr(*c.lo, x, y), hi = eval_expr(*c.hi, x, y);
        bool above = c.lo_closed ? v >= lo : v > lo;
        bool below = c.hi_closed ? v <= hi : v < hi;
        return above && below;
    }
    }
    return false;
}

} // namespace

BinaryMap compile(const MapAst& ast, const Interval& domain) {
    if (ast.is_builtin())
        return builtin(ast.builtin_name, domain);

    auto shared = std::make_shared<const MapAst>(ast);
    return BinaryMap(pretty_print(ast), MapKind::DslCompiled, domain,
                     [shared](double x, double y) {
                         for (const auto& c : shared->cases)
                             if (eval_cond(*c.cond, x, y))
                                 return eval_expr(*c.body, x, y);
                         return eval_expr(*shared->otherwise, x, y);
                     });
}

} // namespace bisym::dsl
