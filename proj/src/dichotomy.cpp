#include "bisym/dichotomy.hpp"

#include <algorithm>
#include <cmath>

#include "bisym/checkers.hpp"
#include "bisym/expr_space.hpp"
#include "bisym/kernels.hpp"
#include "bisym/union_find.hpp"

namespace bisym {

const char* dichotomy_outcome_name(DichotomyOutcome v) {
    switch (v) {
    case DichotomyOutcome::SymmetricEverywhere: return "symmetric-everywhere";
    case DichotomyOutcome::NowhereSymmetric: return "nowhere-symmetric";
    case DichotomyOutcome::HypothesisViolated: return "hypothesis-violated";
    case DichotomyOutcome::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

bool SymPartition::pair_symmetric(int i, int j) const {
    if (i == j)
        return true;
    auto a = static_cast<std::size_t>(std::min(i, j));
    auto b = static_cast<std::size_t>(std::max(i, j));
    return relation[kernels::pair_index(a, b, points.points.size())] != 0;
}

SymPartition partition_by_symmetry(const BinaryMap& f, const SampleGrid& grid,
                                   std::optional<double> tol) {
    const auto& pts = grid.points;
    const std::size_t n = pts.size();
    SymPartition p{grid, tol.value_or(eps_eq(f.domain()))};

    auto sweep = kernels::symmetry_pairs(f, pts, p.tolerance);
    p.relation = std::move(sweep.symmetric);
    p.symmetric_pairs = sweep.symmetric_pairs;
    p.asymmetric_pairs = sweep.asymmetric_pairs;

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t idx = kernels::pair_index(i, j, n);
            if (p.relation[idx])
                uf.merge(i, j);
            double ad = std::abs(sweep.diff[idx]);
            if (ad > p.tolerance && ad <= 10.0 * p.tolerance)
                p.near_threshold_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }

    // components -> classes, ordered by hull
    std::vector<int> root_of(n);
    std::vector<std::vector<int>> members;
    std::vector<std::size_t> root_index(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = uf.find(i);
        if (root_index[r] == static_cast<std::size_t>(-1)) {
            root_index[r] = members.size();
            members.emplace_back();
        }
        members[root_index[r]].push_back(static_cast<int>(i));
        root_of[i] = static_cast<int>(root_index[r]);
    }
    for (auto& m : members) {
        SymClass c;
        c.point_indices = m; // grid points are sorted, so members already are
        c.hull_lo = pts[static_cast<std::size_t>(m.front())];
        c.hull_hi = pts[static_cast<std::size_t>(m.back())];
        p.classes.push_back(std::move(c));
    }
    std::sort(p.classes.begin(), p.classes.end(),
              [](const SymClass& a, const SymClass& b) { return a.hull_lo < b.hull_lo; });

    // clique consistency: connected components may contain asymmetric pairs
    // when ~ fails transitivity numerically; count them, never hide them
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (root_of[i] == root_of[j] && !p.relation[kernels::pair_index(i, j, n)])
                p.clique_violations++;
    p.clique_consistent = p.clique_violations == 0;

    for (std::size_t c = 0; c + 1 < p.classes.size(); ++c)
        if (!(p.classes[c].hull_hi < p.classes[c + 1].hull_lo))
            p.hulls_disjoint = false;

    return p;
}

PropertyReport verify_class_structure(const BinaryMap& f, const SymPartition& partition) {
    PropertyReport r;
    r.property = "class-structure";
    r.tolerance = partition.tolerance;
    const auto& pts = partition.points.points;
    const auto& classes = partition.classes;

    auto witness = [&](std::vector<double> inputs, double lhs, double rhs, const char* note) {
        r.truncated_count++;
        if (r.witnesses.size() < kMaxWitnesses)
            r.witnesses.push_back(Witness{std::move(inputs), lhs, rhs, lhs - rhs, note});
    };

    // (a) hulls must be pairwise disjoint intervals, no interleaving
    for (std::size_t c = 0; c + 1 < classes.size(); ++c) {
        r.samples_checked++;
        if (!(classes[c].hull_hi < classes[c + 1].hull_lo))
            witness({classes[c].hull_lo, classes[c].hull_hi, classes[c + 1].hull_lo,
                     classes[c + 1].hull_hi},
                    classes[c].hull_hi, classes[c + 1].hull_lo, "hull-interleaving");
    }

    // representatives: extreme points of each class
    auto reps = [&](const SymClass& c) {
        std::vector<double> out{pts[static_cast<std::size_t>(c.point_indices.front())]};
        if (c.point_indices.size() > 1)
            out.push_back(pts[static_cast<std::size_t>(c.point_indices.back())]);
        return out;
    };

    // (b) betweenness: I1 < F(I1, I2) < I2 on representatives
    for (std::size_t c1 = 0; c1 < classes.size(); ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < classes.size(); ++c2) {
            for (double x1 : reps(classes[c1])) {
                for (double x2 : reps(classes[c2])) {
                    for (double val : {f(x1, x2), f(x2, x1)}) {
                        r.samples_checked++;
                        if (!(val > classes[c1].hull_hi))
                            witness({x1, x2}, val, classes[c1].hull_hi, "betweenness-low");
                        else if (!(val < classes[c2].hull_lo))
                            witness({x1, x2}, val, classes[c2].hull_lo, "betweenness-high");
                    }
                }
            }
        }
    }

    // (c) class ordering: I1 < I2 implies F(I1,I3) < F(I2,I3), both sides
    for (std::size_t c1 = 0; c1 < classes.size(); ++c1) {
        double r1 = pts[static_cast<std::size_t>(classes[c1].point_indices.front())];
        for (std::size_t c2 = c1 + 1; c2 < classes.size(); ++c2) {
            double r2 = pts[static_cast<std::size_t>(classes[c2].point_indices.front())];
            for (const auto& c3 : classes) {
                double r3 = pts[static_cast<std::size_t>(c3.point_indices.front())];
                r.samples_checked += 2;
                double l1 = f(r1, r3), l2 = f(r2, r3);
                if (!(l1 < l2))
                    witness({r1, r2, r3}, l1, l2, "class-order-left");
                double q1 = f(r3, r1), q2 = f(r3, r2);
                if (!(q1 < q2))
                    witness({r1, r2, r3}, q1, q2, "class-order-right");
            }
        }
    }

    r.verdict = r.truncated_count == 0 ? Verdict::HoldsOnSample : Verdict::Fails;
    return r;
}

PropertyReport symmetry_propagation_check(const BinaryMap& f, double u, double v, int depth,
                                          std::optional<double> tol) {
    auto probe = check_symmetric_at(f, u, v, tol);
    if (!probe.symmetric)
        throw Error(errc::precondition_violation,
                    "F(u,v) != F(v,u): the propagation hypothesis needs a symmetric seed pair");

    PropertyReport r;
    r.property = "symmetry-propagation";
    r.tolerance = tol.value_or(eps_eq(f.domain()));

    auto values = evaluate_value_set(f, u, v, depth, tol);
    std::vector<double> pts(values.size());
    std::transform(values.begin(), values.end(), pts.begin(),
                   [](const ValueLength& w) { return w.value; });

    auto sweep = kernels::symmetry_pairs(f, pts, r.tolerance);
    r.samples_checked = sweep.symmetric.size();
    r.truncated_count = sweep.asymmetric_pairs;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n && r.witnesses.size() < kMaxWitnesses; ++i)
        for (std::size_t j = i + 1; j < n && r.witnesses.size() < kMaxWitnesses; ++j)
            if (!sweep.symmetric[kernels::pair_index(i, j, n)]) {
                double lhs = f(pts[i], pts[j]), rhs = f(pts[j], pts[i]);
                r.witnesses.push_back(Witness{{pts[i], pts[j]}, lhs, rhs, lhs - rhs, {}});
            }
    r.verdict = r.truncated_count == 0 ? Verdict::HoldsOnSample : Verdict::Fails;
    r.stats["generated_values"] = static_cast<double>(n);
    return r;
}

DichotomyVerdict dichotomy_verdict(const BinaryMap& f, const SampleGrid& grid, int quad_n,
                                   std::optional<double> tol) {
    DichotomyVerdict out{DichotomyOutcome::Inconclusive, {}, {},
                         partition_by_symmetry(f, grid, tol)};

    if (out.partition.asymmetric_pairs == 0) {
        out.verdict = DichotomyOutcome::SymmetricEverywhere;
        return out;
    }
    if (out.partition.symmetric_pairs == 0) {
        out.verdict = DichotomyOutcome::NowhereSymmetric;
        return out;
    }

    // Mixed symmetry: the dichotomy theorem says some hypothesis must fail.
    // Reflexivity and strict increase reuse the caller's grid; the quadruple
    // sweep runs on a coarsened grid to bound runtime.
    auto refl = check_reflexive(f, grid, tol);
    auto inc = check_partial_strict_increasing(f, grid);
    auto quad_grid = make_grid(grid.interval, std::min(quad_n, grid.n), grid.seed);
    auto bis = check_bisymmetry(f, quad_grid, tol);

    if (!refl.holds())
        out.failed_hypotheses.push_back(kHypReflexive);
    if (!inc.holds())
        out.failed_hypotheses.push_back(kHypStrictIncreasing);
    if (!bis.holds())
        out.failed_hypotheses.push_back(kHypBisymmetric);

    out.evidence[kHypReflexive] = std::move(refl);
    out.evidence[kHypStrictIncreasing] = std::move(inc);
    out.evidence[kHypBisymmetric] = std::move(bis);

    out.verdict = out.failed_hypotheses.empty() ? DichotomyOutcome::Inconclusive
                                                : DichotomyOutcome::HypothesisViolated;
    return out;
}

nlohmann::json to_json(const SymPartition& p) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : p.classes) {
        nlohmann::json points = nlohmann::json::array();
        for (int idx : c.point_indices)
            points.push_back(p.points.points[static_cast<std::size_t>(idx)]);
        classes.push_back(nlohmann::json{
            {"points", std::move(points)},
            {"hull", {c.hull_lo, c.hull_hi}},
        });
    }
    nlohmann::json near = nlohmann::json::array();
    for (auto [i, j] : p.near_threshold_pairs)
        near.push_back({p.points.points[static_cast<std::size_t>(i)],
                        p.points.points[static_cast<std::size_t>(j)]});
    return nlohmann::json{
        {"tolerance", p.tolerance},
        {"classes", std::move(classes)},
        {"class_count", p.classes.size()},
        {"symmetric_pairs", p.symmetric_pairs},
        {"asymmetric_pairs", p.asymmetric_pairs},
        {"clique_consistent", p.clique_consistent},
        {"clique_violations", p.clique_violations},
        {"hulls_disjoint", p.hulls_disjoint},
        {"near_threshold_pairs", std::move(near)},
    };
}

nlohmann::json to_json(const DichotomyVerdict& v) {
    nlohmann::json evidence = nlohmann::json::object();
    for (const auto& [name, report] : v.evidence)
        evidence[name] = to_json(report);
    return nlohmann::json{
        {"verdict", dichotomy_outcome_name(v.verdict)},
        {"failed_hypotheses", v.failed_hypotheses},
        {"evidence", std::move(evidence)},
        {"partition", to_json(v.partition)},
    };
}

} // namespace bisym
