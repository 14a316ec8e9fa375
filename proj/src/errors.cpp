#include "bisym/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bisym {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_interval: return "invalid-interval";
    case errc::invalid_grid: return "invalid-grid";
    case errc::domain_violation: return "domain-violation";
    case errc::nonfinite_result: return "nonfinite-result";
    case errc::unknown_builtin: return "unknown-builtin";
    case errc::incompatible_domain: return "incompatible-domain";
    case errc::invalid_generator: return "invalid-generator";
    case errc::range_violation: return "range-violation";
    case errc::depth_cap: return "depth-cap";
    case errc::non_monotone_table: return "non-monotone-table";
    case errc::domain_escape: return "domain-escape";
    case errc::precondition_violation: return "precondition-violation";
    case errc::invalid_config: return "invalid-config";
    case errc::lex_error: return "lex-error";
    case errc::syntax_error: return "syntax-error";
    case errc::eval_error: return "eval-error";
    }
    return "unknown";
}

namespace {

std::string domain_violation_message(char axis, double value, double lo, double hi) {
    std::ostringstream os;
    os << "coordinate " << axis << " = " << value << " outside domain [" << lo << ", " << hi
       << "]";
    return os.str();
}

} // namespace

DomainViolation::DomainViolation(char axis, double value, double lo, double hi)
    : Error(errc::domain_violation, domain_violation_message(axis, value, lo, hi)),
      axis_(axis),
      value_(value) {}

ParseError::ParseError(errc code, std::size_t begin, std::size_t end, const std::string& msg,
                       std::vector<std::string> expected, std::string snippet)
    : Error(code, msg),
      begin_(begin),
      end_(end),
      expected_(std::move(expected)),
      snippet_(std::move(snippet)) {}

std::string ParseError::format(const std::string& source) const {
    std::ostringstream os;
    os << errc_name(code()) << " at offset " << begin_;
    if (end_ > begin_ + 1)
        os << ".." << end_;
    os << ": " << what() << "\n";
    if (!expected_.empty()) {
        os << "  expected: ";
        for (std::size_t i = 0; i < expected_.size(); ++i)
            os << (i ? ", " : "") << expected_[i];
        os << "\n";
    }
    // one context line with a caret under the span
    std::size_t lo = begin_ > 24 ? begin_ - 24 : 0;
    std::size_t hi = std::min(source.size(), begin_ + 24);
    std::string line = source.substr(lo, hi - lo);
    for (char& ch : line)
        if (ch == '\n' || ch == '\t' || static_cast<unsigned char>(ch) < 0x20)
            ch = ' ';
    os << "  " << line << "\n";
    os << "  " << std::string(begin_ - lo, ' ') << "^";
    return os.str();
}

EvalError::EvalError(const std::string& what, double x, double y)
    : Error(errc::eval_error,
            what + " at inputs (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
      x_(x),
      y_(y) {}

} // namespace bisym
