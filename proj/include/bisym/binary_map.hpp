#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>

#include "bisym/errors.hpp"
#include "bisym/interval.hpp"

namespace bisym {

enum class MapKind { Builtin, GeneratorBased, WeightedAffine, DslCompiled };

const char* map_kind_name(MapKind k);

/// An evaluable two-argument real map with a declared square domain.
///
/// Immutable after construction; evaluation has no shared mutable state, so a
/// map may be evaluated from any number of threads concurrently. Every
/// evaluation checks the domain and that the result is finite.
class BinaryMap {
public:
    using EvalFn = std::function<double(double, double)>;

    BinaryMap(std::string name, MapKind kind, Interval domain, EvalFn eval)
        : state_(std::make_shared<const State>(
              State{std::move(name), kind, domain, std::move(eval)})) {}

    double operator()(double x, double y) const {
        const State& s = *state_;
        if (!(x >= s.domain.lo && x <= s.domain.hi))
            throw DomainViolation('x', x, s.domain.lo, s.domain.hi);
        if (!(y >= s.domain.lo && y <= s.domain.hi))
            throw DomainViolation('y', y, s.domain.lo, s.domain.hi);
        double r = s.eval(x, y);
        if (!std::isfinite(r))
            throw Error(errc::nonfinite_result,
                        "map '" + s.name + "' produced a non-finite value");
        return r;
    }

    const Interval& domain() const { return state_->domain; }
    MapKind kind() const { return state_->kind; }
    const std::string& name() const { return state_->name; }

private:
    struct State {
        std::string name;
        MapKind kind;
        Interval domain;
        EvalFn eval;
    };
    std::shared_ptr<const State> state_;
};

/// The same map with its arguments exchanged: G(x,y) = F(y,x).
BinaryMap swap_arguments(const BinaryMap& f);

/// A strictly monotone continuous map f: [0,1] -> target together with its
/// inverse. Validated by sampling on construction of the derived map.
struct GeneratorSpec {
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    Interval target;
    std::string name = "generator";
};

/// F(x,y) = f((f^{-1}(x) + f^{-1}(y)) / 2) on the generator's target interval.
/// Throws errc::invalid_generator when the sampled round-trip or the sampled
/// strict-monotonicity check fails.
BinaryMap make_quasi_arithmetic(const GeneratorSpec& g);

/// An invertible continuous scale k, with the range on which the inverse is
/// valid (unbounded by default).
struct KFunction {
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    double range_lo = -std::numeric_limits<double>::infinity();
    double range_hi = std::numeric_limits<double>::infinity();
    std::string name = "k";
};

struct WeightedAffineSpec {
    KFunction k;
    double a;
    double b;
    double c;
    Interval domain;
};

/// F(x,y) = k^{-1}(a*k(x) + b*k(y) + c). Requires a*b != 0; raises
/// errc::range_violation at evaluation time when the affine combination
/// leaves k's range.
BinaryMap make_weighted_affine(const WeightedAffineSpec& spec);

} // namespace bisym
