#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bisym/binary_map.hpp"

namespace bisym {

/// Expressions built from the two leaves u, v by nested application of F.
/// depth(leaf) = 0, depth(apply(l,r)) = 1 + max(depth l, depth r).
struct ExprTree {
    enum class Kind { LeafU, LeafV, Apply };

    Kind kind;
    int depth;
    std::shared_ptr<const ExprTree> left;  // null for leaves
    std::shared_ptr<const ExprTree> right;

    static std::shared_ptr<const ExprTree> leaf_u();
    static std::shared_ptr<const ExprTree> leaf_v();
    static std::shared_ptr<const ExprTree> apply(std::shared_ptr<const ExprTree> l,
                                                 std::shared_ptr<const ExprTree> r);
};

using ExprTreePtr = std::shared_ptr<const ExprTree>;

bool tree_equal(const ExprTree& a, const ExprTree& b);
std::string tree_to_string(const ExprTree& t); // e.g. "F(F(u,v),u)"

/// Trees of depth exactly <= 6 grow as t(n) = t(n-1)^2 + 2; enumeration past
/// depth 4 is astronomically large, hence the hard cap.
inline constexpr int kExprDepthCap = 6;

/// All trees with depth <= the bound, canonically ordered: level by level,
/// leaves first (u before v), new trees at level n in row-major order of
/// their (left, right) positions in the previous cumulative list.
std::vector<ExprTreePtr> enumerate_exprs(int depth);

/// Exact count of trees with depth <= the bound, by the recurrence.
unsigned __int128 count_exprs(int depth);
std::string count_exprs_decimal(int depth);

struct ValueLength {
    double value;
    int length; // minimal depth at which the value appears
};

/// Evaluates the whole expression space up to the given depth, deduplicating
/// values within tolerance (default eps_eq of the map's domain) and keeping
/// the minimal depth of first appearance as each value's length. Sorted by
/// value. Intermediate values that escape the domain raise the map's own
/// domain error.
std::vector<ValueLength> evaluate_value_set(const BinaryMap& f, double u, double v, int depth,
                                            std::optional<double> tol = {});

} // namespace bisym
