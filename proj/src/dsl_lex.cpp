#include <cctype>

#include "bisym/dsl.hpp"

namespace bisym::dsl {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

bool is_keyword(std::string_view s) {
    return s == "piecewise" || s == "if" || s == "else" || s == "in" || s == "and" || s == "or";
}

[[noreturn]] void lex_fail(std::size_t at, const std::string& msg) {
    throw ParseError(errc::lex_error, at, at + 1, msg);
}

} // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (std::isdigit(c)) {
            // digits ['.' digits] [(e|E) [sign] digits]
            while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            if (i < n && src[i] == '.') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(src[i])))
                    lex_fail(i, "expected digits after decimal point");
                while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
                    ++i;
            }
            if (i < n && (src[i] == 'e' || src[i] == 'E')) {
                ++i;
                if (i < n && (src[i] == '+' || src[i] == '-'))
                    ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(src[i])))
                    lex_fail(i, "expected digits in exponent");
                while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
                    ++i;
            }
            out.push_back(Token{TokKind::Number, std::string(src.substr(begin, i - begin)),
                                begin, i});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(static_cast<unsigned char>(src[i])))
                ++i;
            std::string lex(src.substr(begin, i - begin));
            out.push_back(Token{is_keyword(lex) ? TokKind::Keyword : TokKind::Ident,
                                std::move(lex), begin, i});
            continue;
        }
        switch (c) {
        case '+': case '-': case '*': case '/': case '^':
            out.push_back(Token{TokKind::Op, std::string(1, static_cast<char>(c)), begin, ++i});
            continue;
        case '<': case '>': {
            ++i;
            std::string lex(1, static_cast<char>(c));
            if (i < n && src[i] == '=') {
                lex += '=';
                ++i;
            }
            out.push_back(Token{TokKind::Op, std::move(lex), begin, i});
            continue;
        }
        case '=':
            ++i;
            if (i >= n || src[i] != '=')
                lex_fail(begin, "single '=' is not an operator; use '=='");
            ++i;
            out.push_back(Token{TokKind::Op, "==", begin, i});
            continue;
        case '(': case ')': case '[': case ']': case '{': case '}':
        case ',': case ':': case ';':
            out.push_back(Token{TokKind::Punct, std::string(1, static_cast<char>(c)), begin, ++i});
            continue;
        default:
            lex_fail(begin, std::string("unexpected character '") +
                                (std::isprint(c) ? std::string(1, static_cast<char>(c))
                                                 : "\\x" + std::to_string(c)) +
                                "'");
        }
    }
    return out;
}

} // namespace bisym::dsl
