#include "bisym/grid.hpp"

#include <random>

#include "bisym/errors.hpp"

namespace bisym {

namespace {

// 53-bit uniform in [0, 1), independent of the standard library's
// distribution implementation so grids are reproducible everywhere.
double u53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

SampleGrid make_grid(const Interval& iv, int n, std::uint64_t seed) {
    if (n < 2)
        throw Error(errc::invalid_grid, "grid needs at least 2 points");

    std::vector<double> pts(static_cast<std::size_t>(n));
    const double len = iv.length();
    // k*len first, then one division: uniform grids nest exactly
    // (n points vs 2n-1 points share every coarse point bitwise).
    for (int k = 0; k < n; ++k)
        pts[static_cast<std::size_t>(k)] = iv.lo + (static_cast<double>(k) * len) / (n - 1);
    pts.front() = iv.lo;
    pts.back() = iv.hi;

    if (seed != 0) {
        std::mt19937_64 rng(seed);
        const double h = len / (n - 1);
        for (int k = 1; k + 1 < n; ++k) {
            // jitter within +/- 0.45 cells keeps the ordering strict
            double d = (u53(rng) - 0.5) * 0.9 * h;
            pts[static_cast<std::size_t>(k)] += d;
        }
    }
    return SampleGrid{iv, n, seed, std::move(pts)};
}

} // namespace bisym
