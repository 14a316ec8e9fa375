#pragma once

#include <cstdint>
#include <vector>

#include "bisym/interval.hpp"

namespace bisym {

/// A sorted, strictly increasing sample of an interval that always contains
/// both endpoints. seed == 0 gives the uniform grid; any other seed jitters
/// the interior points deterministically (each stays inside its own cell, so
/// strict ordering is preserved).
struct SampleGrid {
    Interval interval;
    int n;
    std::uint64_t seed;
    std::vector<double> points;
};

SampleGrid make_grid(const Interval& iv, int n, std::uint64_t seed = 0);

} // namespace bisym
