#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bisym/binary_map.hpp"
#include "bisym/grid.hpp"
#include "bisym/report.hpp"

namespace bisym {

/// Depth-n table of generator values: values[k] approximates f(k / 2^n),
/// with f(0) = u and f(1) = v. Built level by level; the even cells of each
/// level are bitwise copies of the previous level, so refinement is exact.
struct DyadicTable {
    double u;
    double v;
    int depth;
    std::vector<double> values; // size 2^depth + 1

    std::size_t cells() const { return values.size(); }
    double dyadic(std::size_t k) const; // k / 2^depth
};

inline constexpr int kDyadicDepthCap = 20;

/// Fill midpoints by values[2k+1] = F(prev[k], prev[k+1]) level by level.
/// Throws errc::domain_escape when a value leaves [u, v] by more than the
/// interval's eps_eq (the signature of a non-mean map).
DyadicTable build_dyadic_table(const BinaryMap& f, double u, double v, int depth);

/// Strict increase across adjacent cells, exact comparison.
PropertyReport check_table_monotone(const DyadicTable& table);

struct DensityReport {
    double max_gap = 0.0;
    double bin_width = 0.0;
    std::vector<std::uint64_t> gap_histogram; // 16 equal-width bins over (0, max_gap]
};

/// Adjacent-cell gap statistics; a finite surrogate for density of the
/// generator's image. Requires a monotone table.
DensityReport density_report(const DyadicTable& table);

/// Piecewise-linear interpolant through the table cells: f: [0,1] -> [u,v].
class TableInterpolant {
public:
    explicit TableInterpolant(const DyadicTable& table);
    double operator()(double t) const;

private:
    std::vector<double> values_;
    double u_, v_;
};

/// Piecewise-linear monotone inverse: for x in [values[k], values[k+1]],
/// returns (k + (x - values[k]) / (values[k+1] - values[k])) / 2^n.
/// Exact at table cells. Requires a strictly increasing table.
class TableInverse {
public:
    explicit TableInverse(const DyadicTable& table);
    double operator()(double x) const;

private:
    std::vector<double> values_;
    int depth_;
};

TableInverse invert_table(const DyadicTable& table);

/// The quasi-arithmetic map rebuilt from the table's interpolated generator;
/// domain [u, v]. Symmetric by construction.
BinaryMap reconstruct_map(const DyadicTable& table);

struct ReconstructionReport {
    SampleGrid grid;
    double max_abs_residual = 0.0;
    double argmax_x = 0.0;
    double argmax_y = 0.0;
    double symmetric_defect = 0.0;
};

/// Builds the table at the given depth, reconstructs, and reports the max
/// reconstruction residual over grid x grid together with the map's own
/// symmetric defect max |F(x,y) - F(y,x)|.
ReconstructionReport roundtrip_residual(const BinaryMap& f, double u, double v, int depth,
                                        const SampleGrid& grid);

/// Consistency of the defining identity on non-adjacent dyadics of equal
/// denominator: f((d1+d2)/2) = F(f(d1), f(d2)) for all same-parity index
/// pairs. Holds when the source map is symmetric and bisymmetric; expected
/// to fail otherwise.
PropertyReport check_dyadic_identity(const DyadicTable& table, const BinaryMap& f,
                                     std::optional<double> tol = {});

} // namespace bisym
