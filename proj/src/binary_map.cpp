#include "bisym/binary_map.hpp"

#include <cstdio>

namespace bisym {

const char* map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::Builtin: return "builtin";
    case MapKind::GeneratorBased: return "generator-based";
    case MapKind::WeightedAffine: return "weighted-affine";
    case MapKind::DslCompiled: return "dsl-compiled";
    }
    return "unknown";
}

BinaryMap swap_arguments(const BinaryMap& f) {
    BinaryMap inner = f;
    return BinaryMap(f.name() + "/swapped", f.kind(), f.domain(),
                     [inner](double x, double y) { return inner(y, x); });
}

namespace {

constexpr int kValidationSamples = 129;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

BinaryMap make_quasi_arithmetic(const GeneratorSpec& g) {
    // Sampled strict monotonicity of the forward map on [0, 1].
    double prev = g.forward(0.0);
    if (!std::isfinite(prev))
        throw Error(errc::invalid_generator, "generator not finite at 0");
    int direction = 0;
    for (int k = 1; k < kValidationSamples; ++k) {
        double t = static_cast<double>(k) / (kValidationSamples - 1);
        double cur = g.forward(t);
        if (!std::isfinite(cur))
            throw Error(errc::invalid_generator, "generator not finite at t=" + fmt(t));
        int step = cur > prev ? 1 : cur < prev ? -1 : 0;
        if (step == 0)
            throw Error(errc::invalid_generator, "generator flat near t=" + fmt(t));
        if (direction == 0)
            direction = step;
        else if (step != direction)
            throw Error(errc::invalid_generator, "generator not monotone near t=" + fmt(t));
        prev = cur;
    }

    // Endpoints must land on the target interval (in either orientation).
    const double f0 = g.forward(0.0), f1 = g.forward(1.0);
    const double tol = eps_eq(g.target);
    const double end_lo = direction > 0 ? f0 : f1;
    const double end_hi = direction > 0 ? f1 : f0;
    if (std::abs(end_lo - g.target.lo) > tol || std::abs(end_hi - g.target.hi) > tol)
        throw Error(errc::invalid_generator, "generator image does not match target interval");

    // Sampled round trip f(f^{-1}(x)) = x on the target.
    for (int k = 0; k < kValidationSamples; ++k) {
        double x = g.target.lo +
                   g.target.length() * static_cast<double>(k) / (kValidationSamples - 1);
        double t = g.inverse(x);
        if (!std::isfinite(t))
            throw Error(errc::invalid_generator, "inverse not finite at x=" + fmt(x));
        double back = g.forward(std::min(1.0, std::max(0.0, t)));
        if (std::abs(back - x) > tol)
            throw Error(errc::invalid_generator,
                        "round trip failed at x=" + fmt(x) + ": f(f^-1(x))=" + fmt(back));
    }

    auto fwd = g.forward;
    auto inv = g.inverse;
    return BinaryMap(g.name, MapKind::GeneratorBased, g.target, [fwd, inv](double x, double y) {
        double mid = (inv(x) + inv(y)) / 2.0;
        // guard against last-ulp excursions outside the generator's domain
        mid = std::min(1.0, std::max(0.0, mid));
        return fwd(mid);
    });
}

BinaryMap make_weighted_affine(const WeightedAffineSpec& spec) {
    if (!std::isfinite(spec.a) || !std::isfinite(spec.b) || !std::isfinite(spec.c))
        throw Error(errc::invalid_config, "weighted-affine coefficients must be finite");
    if (spec.a * spec.b == 0.0)
        throw Error(errc::invalid_config, "weighted-affine requires a*b != 0");

    auto k = spec.k.forward;
    auto kinv = spec.k.inverse;
    const double a = spec.a, b = spec.b, c = spec.c;
    const double rlo = spec.k.range_lo, rhi = spec.k.range_hi;
    std::string name = "weighted-affine(" + spec.k.name + ", a=" + fmt(a) + ", b=" + fmt(b) +
                       ", c=" + fmt(c) + ")";
    return BinaryMap(std::move(name), MapKind::WeightedAffine, spec.domain,
                     [k, kinv, a, b, c, rlo, rhi](double x, double y) {
                         double t = a * k(x) + b * k(y) + c;
                         if (!(t >= rlo && t <= rhi))
                             throw Error(errc::range_violation,
                                         "affine combination " + fmt(t) +
                                             " leaves the range of k");
                         return kinv(t);
                     });
}

} // namespace bisym
