#include "bisym/kernels.hpp"

#include "kernels_common.hpp"

// Without OpenMP these variants degrade to the serial loops (the pragmas
// are ignored), so the _omp entry points are always safe to call.

namespace bisym::kernels {

using namespace detail;

namespace {

// Parallel ordered-pair table; every cell is written exactly once.
std::vector<double> pair_table_omp(const BinaryMap& f, std::span<const double> pts) {
    const std::size_t n = pts.size();
    std::vector<double> table(n * n);
    ExceptionCollector exc;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        exc.run([&, i] {
            for (std::size_t j = 0; j < n; ++j)
                table[static_cast<std::size_t>(i) * n + j] =
                    f(pts[static_cast<std::size_t>(i)], pts[j]);
        });
    }
    exc.rethrow();
    return table;
}

} // namespace

PairSweep symmetry_pairs_omp(const BinaryMap& f, std::span<const double> pts, double tol) {
    const std::size_t n = pts.size();
    std::vector<PairSlab> slabs(n);
    ExceptionCollector exc;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        exc.run([&, i] { slabs[static_cast<std::size_t>(i)] =
                             pair_slab(f, pts, tol, static_cast<std::size_t>(i)); });
    exc.rethrow();
    return merge_pair_slabs(std::move(slabs), n);
}

QuadSweep bisymmetry_sweep_omp(const BinaryMap& f, std::span<const double> pts, double tol,
                               std::size_t witness_cap) {
    const std::size_t n = pts.size();
    const std::vector<double> table = pair_table_omp(f, pts);
    std::vector<QuadSlab> slabs(n);
    ExceptionCollector exc;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        exc.run([&, i] {
            slabs[static_cast<std::size_t>(i)] =
                quad_slab(f, pts, table, tol, witness_cap, static_cast<std::size_t>(i));
        });
    exc.rethrow();
    return merge_quad_slabs(std::move(slabs), n, witness_cap);
}

TripleSweep cancellativity_sweep_omp(const BinaryMap& f, std::span<const double> pts, double tol,
                                     std::size_t witness_cap) {
    const std::size_t n = pts.size();
    const std::vector<double> table = pair_table_omp(f, pts);
    std::vector<TripleSlab> slabs(n);
    ExceptionCollector exc;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        exc.run([&, i] {
            slabs[static_cast<std::size_t>(i)] =
                triple_slab(f, pts, table, tol, witness_cap, static_cast<std::size_t>(i));
        });
    exc.rethrow();
    return merge_triple_slabs(std::move(slabs), n, witness_cap);
}

MaxAbsDiff max_abs_diff_omp(const BinaryMap& f, const BinaryMap& g, std::span<const double> xs,
                            std::span<const double> ys) {
    std::vector<RowMax> rows(xs.size());
    ExceptionCollector exc;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i)
        exc.run([&, i] { rows[static_cast<std::size_t>(i)] =
                             residual_row(f, g, xs, ys, static_cast<std::size_t>(i)); });
    exc.rethrow();
    return merge_rows(rows, xs, ys);
}

void dyadic_fill_level_omp(const BinaryMap& f, std::span<const double> prev,
                           std::span<double> next) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(prev.size()) - 1;
    ExceptionCollector exc;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < m; ++k)
        exc.run([&, k] {
            next[2 * static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k)];
            next[2 * static_cast<std::size_t>(k) + 1] =
                f(prev[static_cast<std::size_t>(k)], prev[static_cast<std::size_t>(k) + 1]);
        });
    exc.rethrow();
    next[next.size() - 1] = prev[prev.size() - 1];
}

} // namespace bisym::kernels
