#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisym {

enum class errc {
    invalid_interval,
    invalid_grid,
    domain_violation,
    nonfinite_result,
    unknown_builtin,
    incompatible_domain,
    invalid_generator,
    range_violation,
    depth_cap,
    non_monotone_table,
    domain_escape,
    precondition_violation,
    invalid_config,
    lex_error,
    syntax_error,
    eval_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

/// Evaluation outside the declared domain; carries the offending coordinate.
class DomainViolation : public Error {
public:
    DomainViolation(char axis, double value, double lo, double hi);

    char axis() const { return axis_; }
    double value() const { return value_; }

private:
    char axis_;
    double value_;
};

/// Lexical or syntax error in DSL source, with byte span and diagnostics.
class ParseError : public Error {
public:
    ParseError(errc code, std::size_t begin, std::size_t end, const std::string& msg,
               std::vector<std::string> expected = {}, std::string snippet = {});

    std::size_t begin() const { return begin_; }
    std::size_t end() const { return end_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& snippet() const { return snippet_; }

    /// Multi-line diagnostic with a caret marker under the span.
    std::string format(const std::string& source) const;

private:
    std::size_t begin_, end_;
    std::vector<std::string> expected_;
    std::string snippet_;
};

/// Runtime failure inside a compiled DSL map; carries the inputs.
class EvalError : public Error {
public:
    EvalError(const std::string& what, double x, double y);

    double x() const { return x_; }
    double y() const { return y_; }

private:
    double x_, y_;
};

} // namespace bisym
