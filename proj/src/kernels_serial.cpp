#include "bisym/kernels.hpp"

#include "kernels_common.hpp"

namespace bisym::kernels {

using namespace detail;

PairSweep symmetry_pairs_serial(const BinaryMap& f, std::span<const double> pts, double tol) {
    const std::size_t n = pts.size();
    std::vector<PairSlab> slabs(n);
    for (std::size_t i = 0; i < n; ++i)
        slabs[i] = pair_slab(f, pts, tol, i);
    return merge_pair_slabs(std::move(slabs), n);
}

QuadSweep bisymmetry_sweep_serial(const BinaryMap& f, std::span<const double> pts, double tol,
                                  std::size_t witness_cap) {
    const std::size_t n = pts.size();
    const std::vector<double> table = pair_table(f, pts);
    std::vector<QuadSlab> slabs(n);
    for (std::size_t i = 0; i < n; ++i)
        slabs[i] = quad_slab(f, pts, table, tol, witness_cap, i);
    return merge_quad_slabs(std::move(slabs), n, witness_cap);
}

TripleSweep cancellativity_sweep_serial(const BinaryMap& f, std::span<const double> pts,
                                        double tol, std::size_t witness_cap) {
    const std::size_t n = pts.size();
    const std::vector<double> table = pair_table(f, pts);
    std::vector<TripleSlab> slabs(n);
    for (std::size_t i = 0; i < n; ++i)
        slabs[i] = triple_slab(f, pts, table, tol, witness_cap, i);
    return merge_triple_slabs(std::move(slabs), n, witness_cap);
}

MaxAbsDiff max_abs_diff_serial(const BinaryMap& f, const BinaryMap& g,
                               std::span<const double> xs, std::span<const double> ys) {
    std::vector<RowMax> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        rows[i] = residual_row(f, g, xs, ys, i);
    return merge_rows(rows, xs, ys);
}

void dyadic_fill_level_serial(const BinaryMap& f, std::span<const double> prev,
                              std::span<double> next) {
    for (std::size_t k = 0; k + 1 < prev.size(); ++k) {
        next[2 * k] = prev[k];
        next[2 * k + 1] = f(prev[k], prev[k + 1]);
    }
    next[next.size() - 1] = prev[prev.size() - 1];
}

} // namespace bisym::kernels
