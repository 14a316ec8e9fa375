#include "bisym/builtins.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace bisym {

namespace {

double paper_example_1(double x, double y) {
    if (y >= 0.0 && y < 0.5) {
        // harmonic branch; F(0,0) := 0 keeps the map reflexive at the
        // harmonic-mean limit
        if (x == 0.0 && y == 0.0)
            return 0.0;
        return 2.0 * x * y / (x + y);
    }
    if (x >= 0.0 && x <= 0.5 && y >= 0.5 && y <= 1.0)
        return std::sqrt(x * y);
    return (x + y) / 2.0;
}

double paper_example_2(double x, double y) {
    if (x >= 0.5 && x <= 1.0 && y >= 0.5 && y <= 1.0)
        return y;
    return std::min(x, y);
}

double power_mean(double x, double y, double p) {
    return std::pow((std::pow(x, p) + std::pow(y, p)) / 2.0, 1.0 / p);
}

// log-mean-exp with the max factored out, stable for any lambda scale
double exponential_mean(double x, double y, double lambda) {
    double ax = lambda * x, ay = lambda * y;
    double m = std::max(ax, ay);
    return (m + std::log((std::exp(ax - m) + std::exp(ay - m)) / 2.0)) / lambda;
}

// "power(2)" -> ("power", 2.0). Returns false when name has no parameter.
bool split_parametric(const std::string& name, std::string& head, double& param) {
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')')
        return false;
    head = name.substr(0, open);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    const char* first = arg.data();
    const char* last = arg.data() + arg.size();
    auto [ptr, ec] = std::from_chars(first, last, param);
    if (ec != std::errc{} || ptr != last)
        throw Error(errc::unknown_builtin, "bad parameter in builtin name '" + name + "'");
    return true;
}

void require_positive_lo(const std::string& name, const Interval& domain) {
    if (!(domain.lo > 0.0))
        throw Error(errc::incompatible_domain,
                    "builtin '" + name + "' needs a domain with lo > 0");
}

void require_unit_interval(const std::string& name, const Interval& domain) {
    if (domain.lo != 0.0 || domain.hi != 1.0)
        throw Error(errc::incompatible_domain, "builtin '" + name + "' is fixed on [0, 1]");
}

BinaryMap make(const std::string& name, const Interval& domain, BinaryMap::EvalFn fn) {
    return BinaryMap(name, MapKind::Builtin, domain, std::move(fn));
}

} // namespace

BinaryMap builtin(const std::string& name, const Interval& domain) {
    std::string head;
    double param = 0.0;
    if (split_parametric(name, head, param)) {
        if (head == "power") {
            if (param == 0.0) // power(0) is the geometric mean
                return builtin("geometric", domain);
            if (param < 0.0)
                require_positive_lo(name, domain);
            else if (domain.lo < 0.0)
                throw Error(errc::incompatible_domain,
                            "builtin '" + name + "' needs a domain with lo >= 0");
            double p = param;
            return make(name, domain,
                        [p](double x, double y) { return power_mean(x, y, p); });
        }
        if (head == "exponential") {
            if (param == 0.0)
                throw Error(errc::incompatible_domain,
                            "exponential(0) is degenerate; use arithmetic");
            double l = param;
            return make(name, domain,
                        [l](double x, double y) { return exponential_mean(x, y, l); });
        }
        throw Error(errc::unknown_builtin, "unknown builtin '" + name + "'");
    }

    if (name == "arithmetic")
        return make(name, domain, [](double x, double y) { return (x + y) / 2.0; });
    if (name == "geometric") {
        require_positive_lo(name, domain);
        return make(name, domain, [](double x, double y) { return std::sqrt(x * y); });
    }
    if (name == "harmonic") {
        require_positive_lo(name, domain);
        return make(name, domain, [](double x, double y) { return 2.0 * x * y / (x + y); });
    }
    if (name == "min")
        return make(name, domain, [](double x, double y) { return std::min(x, y); });
    if (name == "max")
        return make(name, domain, [](double x, double y) { return std::max(x, y); });
    if (name == "projection-left")
        return make(name, domain, [](double x, double) { return x; });
    if (name == "projection-right")
        return make(name, domain, [](double, double y) { return y; });
    if (name == "paper-example-1") {
        require_unit_interval(name, domain);
        return make(name, domain, paper_example_1);
    }
    if (name == "paper-example-2") {
        require_unit_interval(name, domain);
        return make(name, domain, paper_example_2);
    }
    throw Error(errc::unknown_builtin, "unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_catalog() {
    return {
        "arithmetic",     "geometric",        "harmonic",
        "power(p)",       "exponential(l)",   "min",
        "max",            "projection-left",  "projection-right",
        "paper-example-1", "paper-example-2",
    };
}

} // namespace bisym
