#include <charconv>

#include "bisym/dsl.hpp"

namespace bisym::dsl {

namespace {

constexpr int kMaxNesting = 200;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src), toks_(tokenize(src)) {}

    MapAst parse_map() {
        if (at_keyword("piecewise"))
            return parse_piecewise();
        if (!done() && cur().kind == TokKind::Ident && cur().lexeme == "builtin" &&
            peek_punct(1, "("))
            return parse_builtin();
        MapAst ast{{}, parse_expr(), ""};
        expect_done();
        return ast;
    }

private:
    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int nesting_ = 0;

    // --- token plumbing ----------------------------------------------------

    bool done() const { return pos_ >= toks_.size(); }
    const Token& cur() const { return toks_[pos_]; }

    bool at_keyword(std::string_view kw) const {
        return !done() && cur().kind == TokKind::Keyword && cur().lexeme == kw;
    }
    bool at_punct(std::string_view p) const {
        return !done() && cur().kind == TokKind::Punct && cur().lexeme == p;
    }
    bool at_op(std::string_view o) const {
        return !done() && cur().kind == TokKind::Op && cur().lexeme == o;
    }
    bool peek_punct(std::size_t ahead, std::string_view p) const {
        return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].kind == TokKind::Punct &&
               toks_[pos_ + ahead].lexeme == p;
    }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
        std::size_t b = done() ? src_.size() : cur().begin;
        std::size_t e = done() ? src_.size() + 1 : cur().end;
        std::size_t lo = b > 16 ? b - 16 : 0;
        std::string snippet(src_.substr(lo, std::min<std::size_t>(48, src_.size() - lo)));
        throw ParseError(errc::syntax_error, b, e, msg, std::move(expected), std::move(snippet));
    }

    Token take(TokKind kind, std::string_view lexeme, const char* what) {
        if (done() || cur().kind != kind || cur().lexeme != lexeme)
            fail(std::string("expected '") + std::string(lexeme) + "'" +
                     (done() ? " but input ended" : " before '" + cur().lexeme + "'"),
                 {std::string(lexeme)});
        return toks_[pos_++];
    }

    void expect_done() {
        if (!done())
            fail("unexpected trailing input '" + cur().lexeme + "'", {"end of input"});
    }

    struct NestingGuard {
        explicit NestingGuard(Parser& p) : p_(p) {
            if (++p_.nesting_ > kMaxNesting)
                p_.fail("expression nesting too deep");
        }
        ~NestingGuard() { --p_.nesting_; }
        Parser& p_;
    };

    // --- map forms ----------------------------------------------------------

    MapAst parse_piecewise() {
        take(TokKind::Keyword, "piecewise", "piecewise");
        take(TokKind::Punct, "{", "{");
        MapAst ast;
        while (at_keyword("if")) {
            ++pos_;
            CondPtr cond = parse_cond();
            take(TokKind::Punct, ":", ":");
            ExprPtr body = parse_expr();
            take(TokKind::Punct, ";", ";");
            ast.cases.push_back(MapAst::Case{std::move(cond), std::move(body)});
        }
        take(TokKind::Keyword, "else", "else");
        take(TokKind::Punct, ":", ":");
        ast.otherwise = parse_expr();
        take(TokKind::Punct, "}", "}");
        expect_done();
        return ast;
    }

    MapAst parse_builtin() {
        ++pos_; // 'builtin'
        Token open = take(TokKind::Punct, "(", "(");
        int balance = 1;
        std::size_t close_begin = 0;
        while (balance > 0) {
            if (done())
                fail("unbalanced parentheses in builtin(...)", {")"});
            if (at_punct("("))
                ++balance;
            else if (at_punct(")")) {
                --balance;
                close_begin = cur().begin;
            }
            ++pos_;
        }
        expect_done();
        // the builtin name is taken verbatim, so names like power(0.5) work
        std::string name(src_.substr(open.end, close_begin - open.end));
        auto first = name.find_first_not_of(" \t\r\n");
        auto last = name.find_last_not_of(" \t\r\n");
        if (first == std::string::npos)
            fail("empty builtin name");
        return MapAst{{}, nullptr, name.substr(first, last - first + 1)};
    }

    // --- conditions ----------------------------------------------------------

    CondPtr parse_cond() { return parse_disj(); }

    CondPtr parse_disj() {
        NestingGuard g(*this);
        CondPtr lhs = parse_conj();
        while (at_keyword("or")) {
            ++pos_;
            CondPtr rhs = parse_conj();
            auto node = std::make_shared<CondNode>();
            node->kind = CondNode::Kind::Or;
            node->ca = std::move(lhs);
            node->cb = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    CondPtr parse_conj() {
        NestingGuard g(*this);
        CondPtr lhs = parse_atom();
        while (at_keyword("and")) {
            ++pos_;
            CondPtr rhs = parse_atom();
            auto node = std::make_shared<CondNode>();
            node->kind = CondNode::Kind::And;
            node->ca = std::move(lhs);
            node->cb = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    CondPtr parse_atom() {
        NestingGuard g(*this);
        // '(' may open a parenthesized condition or a comparison operand;
        // try the condition reading first and fall back on failure
        if (at_punct("(")) {
            std::size_t saved = pos_;
            try {
                ++pos_;
                CondPtr inner = parse_disj();
                take(TokKind::Punct, ")", ")");
                return inner;
            } catch (const ParseError&) {
                pos_ = saved;
            }
        }
        if (!done() && cur().kind == TokKind::Ident &&
            (cur().lexeme == "x" || cur().lexeme == "y") && pos_ + 1 < toks_.size() &&
            toks_[pos_ + 1].kind == TokKind::Keyword && toks_[pos_ + 1].lexeme == "in") {
            char var = cur().lexeme[0];
            pos_ += 2;
            return parse_interval(var);
        }
        ExprPtr lhs = parse_expr();
        if (done() || cur().kind != TokKind::Op ||
            (cur().lexeme != "<" && cur().lexeme != "<=" && cur().lexeme != ">" &&
             cur().lexeme != ">=" && cur().lexeme != "=="))
            fail("expected a comparison operator", {"<", "<=", ">", ">=", "=="});
        std::string op = cur().lexeme;
        ++pos_;
        ExprPtr rhs = parse_expr();
        auto node = std::make_shared<CondNode>();
        node->kind = CondNode::Kind::Cmp;
        node->cmp = std::move(op);
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    CondPtr parse_interval(char var) {
        bool lo_closed;
        if (at_punct("["))
            lo_closed = true;
        else if (at_punct("("))
            lo_closed = false;
        else
            fail("expected an interval", {"[", "("});
        ++pos_;
        ExprPtr lo = parse_expr();
        take(TokKind::Punct, ",", ",");
        ExprPtr hi = parse_expr();
        bool hi_closed;
        if (at_punct("]"))
            hi_closed = true;
        else if (at_punct(")") || at_punct("[")) // [a,b[ spells right-open too
            hi_closed = false;
        else
            fail("expected an interval close", {"]", ")", "["});
        ++pos_;
        auto node = std::make_shared<CondNode>();
        node->kind = CondNode::Kind::In;
        node->var = var;
        node->lo = std::move(lo);
        node->hi = std::move(hi);
        node->lo_closed = lo_closed;
        node->hi_closed = hi_closed;
        return node;
    }

    // --- expressions ----------------------------------------------------------

    ExprPtr make_binary(ExprNode::Kind kind, ExprPtr a, ExprPtr b) {
        auto node = std::make_shared<ExprNode>();
        node->kind = kind;
        node->a = std::move(a);
        node->b = std::move(b);
        return node;
    }

    ExprPtr parse_expr() {
        NestingGuard g(*this);
        ExprPtr lhs = parse_term();
        while (at_op("+") || at_op("-")) {
            bool add = cur().lexeme == "+";
            ++pos_;
            lhs = make_binary(add ? ExprNode::Kind::Add : ExprNode::Kind::Sub, std::move(lhs),
                              parse_term());
        }
        return lhs;
    }

    ExprPtr parse_term() {
        NestingGuard g(*this);
        ExprPtr lhs = parse_unary();
        while (at_op("*") || at_op("/")) {
            bool mul = cur().lexeme == "*";
            ++pos_;
            lhs = make_binary(mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div, std::move(lhs),
                              parse_unary());
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        NestingGuard g(*this);
        if (at_op("-")) {
            ++pos_;
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::Neg;
            node->a = parse_unary();
            return node;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        NestingGuard g(*this);
        ExprPtr base = parse_primary();
        if (at_op("^")) {
            ++pos_;
            // right-associative; the exponent may carry a unary minus
            return make_binary(ExprNode::Kind::Pow, std::move(base), parse_unary());
        }
        return base;
    }

    ExprPtr parse_primary() {
        NestingGuard g(*this);
        if (done())
            fail("expected an expression but input ended",
                 {"number", "x", "y", "function", "("});
        if (cur().kind == TokKind::Number) {
            double value = 0.0;
            const std::string& lex = cur().lexeme;
            auto [ptr, ec] = std::from_chars(lex.data(), lex.data() + lex.size(), value);
            if (ec != std::errc{} || ptr != lex.data() + lex.size())
                fail("number literal out of range");
            ++pos_;
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::Num;
            node->num = value;
            return node;
        }
        if (cur().kind == TokKind::Ident) {
            std::string name = cur().lexeme;
            if (name == "x" || name == "y") {
                ++pos_;
                auto node = std::make_shared<ExprNode>();
                node->kind = name == "x" ? ExprNode::Kind::VarX : ExprNode::Kind::VarY;
                return node;
            }
            if (name == "sqrt" || name == "exp" || name == "log" || name == "abs") {
                ++pos_;
                take(TokKind::Punct, "(", "(");
                ExprPtr arg = parse_expr();
                take(TokKind::Punct, ")", ")");
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::Kind::Call1;
                node->fn = std::move(name);
                node->a = std::move(arg);
                return node;
            }
            if (name == "min" || name == "max") {
                ++pos_;
                take(TokKind::Punct, "(", "(");
                ExprPtr a = parse_expr();
                take(TokKind::Punct, ",", ",");
                ExprPtr b = parse_expr();
                take(TokKind::Punct, ")", ")");
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::Kind::Call2;
                node->fn = std::move(name);
                node->a = std::move(a);
                node->b = std::move(b);
                return node;
            }
            fail("unknown identifier '" + name + "' (variables are x and y)",
                 {"x", "y", "sqrt", "exp", "log", "min", "max", "abs"});
        }
        if (at_punct("(")) {
            ++pos_;
            ExprPtr inner = parse_expr();
            take(TokKind::Punct, ")", ")");
            return inner;
        }
        fail("expected an expression before '" + cur().lexeme + "'",
             {"number", "x", "y", "function", "("});
    }
};

} // namespace

MapAst parse(std::string_view source) {
    Parser parser(source);
    return parser.parse_map();
}

BinaryMap compile_source(std::string_view source, const Interval& domain) {
    return compile(parse(source), domain);
}

} // namespace bisym::dsl
