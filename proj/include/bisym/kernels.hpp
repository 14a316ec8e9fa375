#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bisym/binary_map.hpp"
#include "bisym/report.hpp"

namespace bisym::kernels {

// The hot sweeps exist in two variants: a plain serial reference and an
// OpenMP one. Both produce identical results (witnesses in lexicographic
// input order, max locations tie-broken by lowest index), so the tests can
// compare them bitwise and everything downstream is deterministic. The
// unsuffixed entry points dispatch to the OpenMP variant when the build has
// it, and to the serial one otherwise.

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Flattened index of the unordered pair (i, j), i < j, over n points.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

struct PairSweep {
    std::vector<std::uint8_t> symmetric; // one flag per unordered pair i < j
    std::vector<double> diff;            // F(a,b) - F(b,a), same indexing
    std::uint64_t symmetric_pairs = 0;
    std::uint64_t asymmetric_pairs = 0;
};

PairSweep symmetry_pairs_serial(const BinaryMap& f, std::span<const double> pts, double tol);
PairSweep symmetry_pairs_omp(const BinaryMap& f, std::span<const double> pts, double tol);
PairSweep symmetry_pairs(const BinaryMap& f, std::span<const double> pts, double tol);

struct QuadSweep {
    std::vector<Witness> witnesses; // first few in lex order of (x,y,u,v)
    std::uint64_t violation_count = 0;
    std::uint64_t codomain_violations = 0;
    std::uint64_t quadruples = 0;
};

QuadSweep bisymmetry_sweep_serial(const BinaryMap& f, std::span<const double> pts, double tol,
                                  std::size_t witness_cap = kMaxWitnesses);
QuadSweep bisymmetry_sweep_omp(const BinaryMap& f, std::span<const double> pts, double tol,
                               std::size_t witness_cap = kMaxWitnesses);
QuadSweep bisymmetry_sweep(const BinaryMap& f, std::span<const double> pts, double tol,
                           std::size_t witness_cap = kMaxWitnesses);

struct TripleSweep {
    std::vector<Witness> witnesses; // lex order of (x,y,a); note is "left"/"right"
    std::uint64_t violation_count = 0;
    std::uint64_t left_count = 0;
    std::uint64_t right_count = 0;
    std::uint64_t checks = 0;
};

TripleSweep cancellativity_sweep_serial(const BinaryMap& f, std::span<const double> pts, double tol,
                                        std::size_t witness_cap = kMaxWitnesses);
TripleSweep cancellativity_sweep_omp(const BinaryMap& f, std::span<const double> pts, double tol,
                                     std::size_t witness_cap = kMaxWitnesses);
TripleSweep cancellativity_sweep(const BinaryMap& f, std::span<const double> pts, double tol,
                                 std::size_t witness_cap = kMaxWitnesses);

struct MaxAbsDiff {
    double value = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// max |f(x,y) - g(x,y)| over xs × ys; argmax is the first attaining pair in
/// row-major order.
MaxAbsDiff max_abs_diff_serial(const BinaryMap& f, const BinaryMap& g,
                               std::span<const double> xs, std::span<const double> ys);
MaxAbsDiff max_abs_diff_omp(const BinaryMap& f, const BinaryMap& g,
                            std::span<const double> xs, std::span<const double> ys);
MaxAbsDiff max_abs_diff(const BinaryMap& f, const BinaryMap& g,
                        std::span<const double> xs, std::span<const double> ys);

/// One refinement level of the dyadic table: even cells are copied from
/// prev, odd cells are F of the two neighbours. next.size() == 2*prev.size()-1.
void dyadic_fill_level_serial(const BinaryMap& f, std::span<const double> prev,
                              std::span<double> next);
void dyadic_fill_level_omp(const BinaryMap& f, std::span<const double> prev,
                           std::span<double> next);
void dyadic_fill_level(const BinaryMap& f, std::span<const double> prev, std::span<double> next);

/// True when the library was built with OpenMP support.
bool openmp_enabled();

} // namespace bisym::kernels
