#include "bisym/kernels.hpp"

namespace bisym::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

PairSweep symmetry_pairs(const BinaryMap& f, std::span<const double> pts, double tol) {
#ifdef _OPENMP
    return symmetry_pairs_omp(f, pts, tol);
#else
    return symmetry_pairs_serial(f, pts, tol);
#endif
}

QuadSweep bisymmetry_sweep(const BinaryMap& f, std::span<const double> pts, double tol,
                           std::size_t witness_cap) {
#ifdef _OPENMP
    return bisymmetry_sweep_omp(f, pts, tol, witness_cap);
#else
    return bisymmetry_sweep_serial(f, pts, tol, witness_cap);
#endif
}

TripleSweep cancellativity_sweep(const BinaryMap& f, std::span<const double> pts, double tol,
                                 std::size_t witness_cap) {
#ifdef _OPENMP
    return cancellativity_sweep_omp(f, pts, tol, witness_cap);
#else
    return cancellativity_sweep_serial(f, pts, tol, witness_cap);
#endif
}

MaxAbsDiff max_abs_diff(const BinaryMap& f, const BinaryMap& g, std::span<const double> xs,
                        std::span<const double> ys) {
#ifdef _OPENMP
    return max_abs_diff_omp(f, g, xs, ys);
#else
    return max_abs_diff_serial(f, g, xs, ys);
#endif
}

void dyadic_fill_level(const BinaryMap& f, std::span<const double> prev, std::span<double> next) {
    // parallel pays off only once a level has a few thousand cells
    if (prev.size() >= 4096) {
        dyadic_fill_level_omp(f, prev, next);
    } else {
        dyadic_fill_level_serial(f, prev, next);
    }
}

} // namespace bisym::kernels
