#include "bisym/expr_space.hpp"

#include <algorithm>
#include <cmath>

#include "bisym/errors.hpp"

namespace bisym {

ExprTreePtr ExprTree::leaf_u() {
    static const ExprTreePtr t = std::make_shared<const ExprTree>(ExprTree{Kind::LeafU, 0, {}, {}});
    return t;
}

ExprTreePtr ExprTree::leaf_v() {
    static const ExprTreePtr t = std::make_shared<const ExprTree>(ExprTree{Kind::LeafV, 0, {}, {}});
    return t;
}

ExprTreePtr ExprTree::apply(ExprTreePtr l, ExprTreePtr r) {
    int d = 1 + std::max(l->depth, r->depth);
    return std::make_shared<const ExprTree>(ExprTree{Kind::Apply, d, std::move(l), std::move(r)});
}

bool tree_equal(const ExprTree& a, const ExprTree& b) {
    if (a.kind != b.kind)
        return false;
    if (a.kind != ExprTree::Kind::Apply)
        return true;
    return tree_equal(*a.left, *b.left) && tree_equal(*a.right, *b.right);
}

std::string tree_to_string(const ExprTree& t) {
    switch (t.kind) {
    case ExprTree::Kind::LeafU: return "u";
    case ExprTree::Kind::LeafV: return "v";
    case ExprTree::Kind::Apply:
        return "F(" + tree_to_string(*t.left) + "," + tree_to_string(*t.right) + ")";
    }
    return "?";
}

namespace {

void check_depth(int depth) {
    if (depth < 0 || depth > kExprDepthCap)
        throw Error(errc::depth_cap, "expression depth must be in [0, " +
                                         std::to_string(kExprDepthCap) + "]");
}

} // namespace

std::vector<ExprTreePtr> enumerate_exprs(int depth) {
    check_depth(depth);
    std::vector<ExprTreePtr> trees{ExprTree::leaf_u(), ExprTree::leaf_v()};
    std::size_t level_begin = 0; // first index whose depth is the previous level
    for (int level = 1; level <= depth; ++level) {
        const std::size_t sz = trees.size();
        // an apply is new at this level iff one child has depth level-1,
        // i.e. at least one child index is past the previous level's start
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j)
                if (i >= level_begin || j >= level_begin)
                    trees.push_back(ExprTree::apply(trees[i], trees[j]));
        level_begin = sz;
    }
    return trees;
}

unsigned __int128 count_exprs(int depth) {
    check_depth(depth);
    unsigned __int128 t = 2;
    for (int level = 1; level <= depth; ++level)
        t = t * t + 2;
    return t;
}

std::string count_exprs_decimal(int depth) {
    unsigned __int128 v = count_exprs(depth);
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    } while (v != 0);
    return s;
}

std::vector<ValueLength> evaluate_value_set(const BinaryMap& f, double u, double v, int depth,
                                            std::optional<double> tol) {
    check_depth(depth);
    if (!f.domain().contains(u) || !f.domain().contains(v))
        throw Error(errc::precondition_violation, "u and v must lie in the map's domain");
    if (u == v)
        throw Error(errc::precondition_violation, "u and v must be distinct");
    const double t = tol.value_or(eps_eq(f.domain()));

    std::vector<ValueLength> vals;
    auto seen = [&](double x) {
        auto it = std::lower_bound(vals.begin(), vals.end(), x,
                                   [](const ValueLength& a, double b) { return a.value < b; });
        if (it != vals.end() && std::abs(it->value - x) <= t)
            return true;
        if (it != vals.begin() && std::abs(std::prev(it)->value - x) <= t)
            return true;
        return false;
    };
    auto insert = [&](double x, int length) {
        auto it = std::lower_bound(vals.begin(), vals.end(), x,
                                   [](const ValueLength& a, double b) { return a.value < b; });
        vals.insert(it, ValueLength{x, length});
    };

    insert(std::min(u, v), 0);
    insert(std::max(u, v), 0);

    for (int level = 1; level <= depth; ++level) {
        std::vector<double> snapshot(vals.size());
        std::transform(vals.begin(), vals.end(), snapshot.begin(),
                       [](const ValueLength& w) { return w.value; });
        for (double a : snapshot) {
            for (double b : snapshot) {
                double x = f(a, b);
                if (!seen(x))
                    insert(x, level);
            }
        }
    }
    return vals;
}

} // namespace bisym
