#pragma once

#include <algorithm>
#include <cmath>

#include "bisym/errors.hpp"

namespace bisym {

/// A proper closed real interval [lo, hi] with finite endpoints and lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw Error(errc::invalid_interval, "interval endpoints must be finite");
        if (!(lo < hi))
            throw Error(errc::invalid_interval, "interval must be proper (lo < hi)");
    }

    double length() const { return hi - lo; }

    bool contains(double x) const { return x >= lo && x <= hi; }

    double clamp(double x) const { return std::min(hi, std::max(lo, x)); }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Equality tolerance used by every checker: absolute, scaled to the
/// interval once it is wider than the unit interval.
inline double eps_eq(const Interval& iv) {
    return 1e-9 * std::max(1.0, iv.length());
}

} // namespace bisym
