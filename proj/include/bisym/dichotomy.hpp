#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisym/binary_map.hpp"
#include "bisym/grid.hpp"
#include "bisym/report.hpp"

namespace bisym {

/// One sampled symmetry-equivalence class with its convex hull.
struct SymClass {
    std::vector<int> point_indices; // sorted
    double hull_lo;
    double hull_hi;
};

/// Sampled partition of grid points under a ~ b iff F(a,b) = F(b,a).
///
/// Classes are connected components of the symmetric-pair graph, not maximal
/// cliques: near-tolerance evidence is surfaced (clique_violations,
/// near_threshold_pairs) rather than hidden behind a tie-break.
struct SymPartition {
    SampleGrid points;
    double tolerance;
    std::vector<SymClass> classes;                     // ordered by hull_lo
    std::vector<std::uint8_t> relation;                // pair flags, i < j, flattened
    std::vector<std::pair<int, int>> near_threshold_pairs; // |diff| in (tol, 10*tol]
    std::uint64_t symmetric_pairs = 0;
    std::uint64_t asymmetric_pairs = 0;
    std::uint64_t clique_violations = 0; // asymmetric pairs inside one class
    bool clique_consistent = true;
    bool hulls_disjoint = true;

    bool pair_symmetric(int i, int j) const;
};

SymPartition partition_by_symmetry(const BinaryMap& f, const SampleGrid& grid,
                                   std::optional<double> tol = {});

/// Structural claims about the partition: (a) class hulls are pairwise
/// disjoint, no interleaving; (b) for classes I1 < I2, representatives give
/// max hull(I1) < F(x1,x2) < min hull(I2); (c) class ordering is respected:
/// F(I1,I3) < F(I2,I3) and F(I3,I1) < F(I3,I2) on representatives.
PropertyReport verify_class_structure(const BinaryMap& f, const SymPartition& partition);

/// Requires F(u,v) = F(v,u); enumerates the value set generated from (u, v)
/// to the given depth and verifies symmetry for every pair in it.
PropertyReport symmetry_propagation_check(const BinaryMap& f, double u, double v, int depth,
                                          std::optional<double> tol = {});

enum class DichotomyOutcome {
    SymmetricEverywhere,
    NowhereSymmetric,
    HypothesisViolated,
    Inconclusive,
};

const char* dichotomy_outcome_name(DichotomyOutcome v);

struct DichotomyVerdict {
    DichotomyOutcome verdict;
    std::vector<std::string> failed_hypotheses; // subset of the three names below
    std::map<std::string, PropertyReport> evidence;
    SymPartition partition;
};

inline constexpr const char* kHypReflexive = "reflexive";
inline constexpr const char* kHypStrictIncreasing = "partially-strictly-increasing";
inline constexpr const char* kHypBisymmetric = "bisymmetric";

/// Three-way classification plus the escape hatch:
///  - every off-diagonal pair symmetric  -> symmetric-everywhere
///  - no off-diagonal pair symmetric     -> nowhere-symmetric
///  - mixed -> reflexivity, strict increase and bisymmetry are re-checked
///    (bisymmetry on a grid coarsened to quad_n points); any failure yields
///    hypothesis-violated, otherwise the verdict is inconclusive — which the
///    dichotomy theorem forbids, so it is reported prominently.
DichotomyVerdict dichotomy_verdict(const BinaryMap& f, const SampleGrid& grid, int quad_n = 17,
                                   std::optional<double> tol = {});

nlohmann::json to_json(const SymPartition& p);
nlohmann::json to_json(const DichotomyVerdict& v);

} // namespace bisym
