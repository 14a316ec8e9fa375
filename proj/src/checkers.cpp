#include "bisym/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bisym/kernels.hpp"

namespace bisym {

namespace {

double resolve_tol(const BinaryMap& f, std::optional<double> tol) {
    return tol.value_or(eps_eq(f.domain()));
}

void require_grid_in_domain(const BinaryMap& f, const SampleGrid& grid) {
    if (grid.points.front() < f.domain().lo || grid.points.back() > f.domain().hi)
        throw Error(errc::invalid_grid, "grid is not contained in the map's domain");
}

void finalize(PropertyReport& r) {
    r.verdict = r.truncated_count == 0 ? Verdict::HoldsOnSample : Verdict::Fails;
    if (r.witnesses.size() > kMaxWitnesses)
        r.witnesses.resize(kMaxWitnesses);
}

std::string section_label(const char* axis, double fixed) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s-section at %.17g", axis, fixed);
    return buf;
}

} // namespace

PropertyReport check_reflexive(const BinaryMap& f, const SampleGrid& grid,
                               std::optional<double> tol) {
    require_grid_in_domain(f, grid);
    PropertyReport r;
    r.property = "reflexive";
    r.tolerance = resolve_tol(f, tol);
    r.samples_checked = grid.points.size();
    for (double x : grid.points) {
        double v = f(x, x);
        double d = v - x;
        if (std::abs(d) > r.tolerance) {
            r.truncated_count++;
            if (r.witnesses.size() < kMaxWitnesses)
                r.witnesses.push_back(Witness{{x}, v, x, d, {}});
        }
    }
    finalize(r);
    return r;
}

SymmetryProbe check_symmetric_at(const BinaryMap& f, double a, double b,
                                 std::optional<double> tol) {
    double lhs = f(a, b);
    double rhs = f(b, a);
    return SymmetryProbe{a, b, lhs, rhs, std::abs(lhs - rhs) <= resolve_tol(f, tol)};
}

PropertyReport check_symmetry(const BinaryMap& f, const SampleGrid& grid,
                              std::optional<double> tol) {
    require_grid_in_domain(f, grid);
    const auto& pts = grid.points;
    PropertyReport r;
    r.property = "symmetric";
    r.tolerance = resolve_tol(f, tol);

    auto sweep = kernels::symmetry_pairs(f, pts, r.tolerance);
    r.samples_checked = sweep.symmetric.size();
    r.truncated_count = sweep.asymmetric_pairs;
    r.stats["symmetric_pairs"] = static_cast<double>(sweep.symmetric_pairs);
    r.stats["asymmetric_pairs"] = static_cast<double>(sweep.asymmetric_pairs);

    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n && r.witnesses.size() < kMaxWitnesses; ++i) {
        for (std::size_t j = i + 1; j < n && r.witnesses.size() < kMaxWitnesses; ++j) {
            if (sweep.symmetric[kernels::pair_index(i, j, n)])
                continue;
            double lhs = f(pts[i], pts[j]);
            double rhs = f(pts[j], pts[i]);
            r.witnesses.push_back(Witness{{pts[i], pts[j]}, lhs, rhs, lhs - rhs, {}});
        }
    }
    finalize(r);
    return r;
}

PropertyReport check_bisymmetry(const BinaryMap& f, const SampleGrid& grid,
                                std::optional<double> tol) {
    require_grid_in_domain(f, grid);
    PropertyReport r;
    r.property = "bisymmetric";
    r.tolerance = resolve_tol(f, tol);

    auto sweep = kernels::bisymmetry_sweep(f, grid.points, r.tolerance, kMaxWitnesses);
    r.samples_checked = sweep.quadruples;
    r.truncated_count = sweep.violation_count;
    r.witnesses = std::move(sweep.witnesses);
    r.stats["codomain_violations"] = static_cast<double>(sweep.codomain_violations);
    finalize(r);
    return r;
}

PropertyReport check_partial_strict_increasing(const BinaryMap& f, const SampleGrid& grid) {
    require_grid_in_domain(f, grid);
    const auto& pts = grid.points;
    const std::size_t n = pts.size();
    PropertyReport r;
    r.property = "partially-strictly-increasing";
    r.tolerance = 0.0; // exact comparison; a tolerance would hide flat sections
    r.samples_checked = 2 * n * (n - 1);

    double min_slope = std::numeric_limits<double>::infinity();
    auto scan = [&](const char* axis, double fixed, auto section) {
        double prev = section(pts[0]);
        for (std::size_t k = 1; k < n; ++k) {
            double cur = section(pts[k]);
            double slope = (cur - prev) / (pts[k] - pts[k - 1]);
            min_slope = std::min(min_slope, slope);
            if (!(cur > prev)) {
                r.truncated_count++;
                if (r.witnesses.size() < kMaxWitnesses)
                    r.witnesses.push_back(Witness{{pts[k - 1], pts[k], fixed}, prev, cur,
                                                  cur - prev, section_label(axis, fixed)});
            }
            prev = cur;
        }
    };
    for (double y0 : pts)
        scan("x", y0, [&](double x) { return f(x, y0); });
    for (double x0 : pts)
        scan("y", x0, [&](double y) { return f(x0, y); });

    r.stats["min_slope"] = min_slope;
    finalize(r);
    return r;
}

PropertyReport check_cancellative(const BinaryMap& f, const SampleGrid& grid,
                                  std::optional<double> tol) {
    require_grid_in_domain(f, grid);
    PropertyReport r;
    r.property = "cancellative";
    r.tolerance = resolve_tol(f, tol);

    auto sweep = kernels::cancellativity_sweep(f, grid.points, r.tolerance, kMaxWitnesses);
    r.samples_checked = sweep.checks;
    r.truncated_count = sweep.violation_count;
    r.witnesses = std::move(sweep.witnesses);
    r.stats["left_witnesses"] = static_cast<double>(sweep.left_count);
    r.stats["right_witnesses"] = static_cast<double>(sweep.right_count);
    finalize(r);
    return r;
}

PropertyReport check_mean_bounds(const BinaryMap& f, const SampleGrid& grid, bool strict,
                                 std::optional<double> tol) {
    require_grid_in_domain(f, grid);
    const auto& pts = grid.points;
    PropertyReport r;
    r.property = strict ? "strict-mean" : "mean";
    r.tolerance = resolve_tol(f, tol);
    r.samples_checked = pts.size() * pts.size();

    for (double x : pts) {
        for (double y : pts) {
            double v = f(x, y);
            double mn = std::min(x, y), mx = std::max(x, y);
            bool bad;
            if (strict && x != y)
                bad = !(v > mn && v < mx);
            else
                bad = v < mn - r.tolerance || v > mx + r.tolerance;
            if (bad) {
                r.truncated_count++;
                if (r.witnesses.size() < kMaxWitnesses) {
                    double bound = v <= mn ? mn : mx;
                    r.witnesses.push_back(Witness{{x, y}, v, bound, v - bound, {}});
                }
            }
        }
    }
    finalize(r);
    return r;
}

} // namespace bisym
