#pragma once

#include <optional>

#include "bisym/binary_map.hpp"
#include "bisym/grid.hpp"
#include "bisym/report.hpp"

namespace bisym {

// Sampled verification of the individual axioms. Every checker is a pure
// function of (map, grid); verdicts are "holds-on-sample", never "holds".
// The tolerance defaults to eps_eq(map.domain()).

/// F(x,x) = x on every grid point.
PropertyReport check_reflexive(const BinaryMap& f, const SampleGrid& grid,
                               std::optional<double> tol = {});

struct SymmetryProbe {
    double a, b;
    double lhs, rhs; // F(a,b), F(b,a)
    bool symmetric;
};

/// Is F symmetric at the single pair (a, b)?
SymmetryProbe check_symmetric_at(const BinaryMap& f, double a, double b,
                                 std::optional<double> tol = {});

/// Classifies every unordered off-diagonal grid pair as symmetric or
/// asymmetric; stats carry the two class counts.
PropertyReport check_symmetry(const BinaryMap& f, const SampleGrid& grid,
                              std::optional<double> tol = {});

/// F(F(x,y),F(u,v)) = F(F(x,u),F(y,v)) over all grid quadruples. Inner values
/// that leave the domain are counted as codomain violations (stats), not as
/// bisymmetry witnesses.
PropertyReport check_bisymmetry(const BinaryMap& f, const SampleGrid& grid,
                                std::optional<double> tol = {});

/// Both one-variable sections must be strictly increasing across consecutive
/// grid points. Exact comparison, margin zero: a tolerance would misclassify
/// genuinely flat sections. stats["min_slope"] records the smallest observed
/// section slope so near-flat maps still surface.
PropertyReport check_partial_strict_increasing(const BinaryMap& f, const SampleGrid& grid);

/// F(x,a) = F(y,a) with x != y (beyond tolerance) is a left witness; mirrored
/// on the right.
PropertyReport check_cancellative(const BinaryMap& f, const SampleGrid& grid,
                                  std::optional<double> tol = {});

/// min(x,y) <= F(x,y) <= max(x,y); with strict=true the inequalities must be
/// strict (exact comparison) whenever x != y.
PropertyReport check_mean_bounds(const BinaryMap& f, const SampleGrid& grid, bool strict = false,
                                 std::optional<double> tol = {});

} // namespace bisym
