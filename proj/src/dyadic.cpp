#include "bisym/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "bisym/kernels.hpp"

namespace bisym {

double DyadicTable::dyadic(std::size_t k) const {
    return static_cast<double>(k) / static_cast<double>(std::size_t{1} << depth);
}

DyadicTable build_dyadic_table(const BinaryMap& f, double u, double v, int depth) {
    if (depth < 0 || depth > kDyadicDepthCap)
        throw Error(errc::depth_cap,
                    "table depth must be in [0, " + std::to_string(kDyadicDepthCap) + "]");
    if (!(u < v))
        throw Error(errc::invalid_config, "need u < v");
    if (!f.domain().contains(u) || !f.domain().contains(v))
        throw Error(errc::invalid_config, "u and v must lie in the map's domain");

    const Interval span(u, v);
    const double tol = eps_eq(span);
    // Values may drift an ulp past [u,v]; feed the next level through a
    // tolerance-padded wrapper that clamps arguments back into the true
    // domain, but keep raw values in the table.
    const BinaryMap clamped(f.name(), f.kind(),
                            Interval(f.domain().lo - tol, f.domain().hi + tol),
                            [f](double x, double y) {
                                const Interval& d = f.domain();
                                return f(d.clamp(x), d.clamp(y));
                            });

    std::vector<double> level{u, v};
    for (int m = 1; m <= depth; ++m) {
        std::vector<double> next(2 * level.size() - 1);
        kernels::dyadic_fill_level(clamped, level, next);
        for (std::size_t k = 1; k < next.size(); k += 2) {
            if (next[k] < u - tol || next[k] > v + tol)
                throw Error(errc::domain_escape,
                            "midpoint value " + std::to_string(next[k]) +
                                " escapes [u, v]; the map is not a mean on this cell");
        }
        level = std::move(next);
    }
    return DyadicTable{u, v, depth, std::move(level)};
}

PropertyReport check_table_monotone(const DyadicTable& table) {
    PropertyReport r;
    r.property = "table-monotone";
    r.tolerance = 0.0;
    r.samples_checked = table.values.size() - 1;
    for (std::size_t k = 0; k + 1 < table.values.size(); ++k) {
        double a = table.values[k], b = table.values[k + 1];
        if (!(b > a)) {
            r.truncated_count++;
            if (r.witnesses.size() < kMaxWitnesses)
                r.witnesses.push_back(Witness{{table.dyadic(k), table.dyadic(k + 1)}, a, b,
                                              b - a, "adjacent cells"});
        }
    }
    r.verdict = r.truncated_count == 0 ? Verdict::HoldsOnSample : Verdict::Fails;
    return r;
}

namespace {

void require_monotone(const DyadicTable& table) {
    if (!check_table_monotone(table).holds())
        throw Error(errc::non_monotone_table, "table is not strictly increasing");
}

} // namespace

DensityReport density_report(const DyadicTable& table) {
    require_monotone(table);
    DensityReport r;
    r.gap_histogram.assign(16, 0);
    for (std::size_t k = 0; k + 1 < table.values.size(); ++k)
        r.max_gap = std::max(r.max_gap, table.values[k + 1] - table.values[k]);
    r.bin_width = r.max_gap / 16.0;
    for (std::size_t k = 0; k + 1 < table.values.size(); ++k) {
        double gap = table.values[k + 1] - table.values[k];
        auto bin = static_cast<std::size_t>(gap / r.max_gap * 16.0);
        r.gap_histogram[std::min<std::size_t>(bin, 15)]++;
    }
    return r;
}

TableInterpolant::TableInterpolant(const DyadicTable& table)
    : values_(table.values), u_(table.u), v_(table.v) {}

double TableInterpolant::operator()(double t) const {
    if (t <= 0.0)
        return values_.front();
    if (t >= 1.0)
        return values_.back();
    const std::size_t cells = values_.size() - 1;
    double scaled = t * static_cast<double>(cells);
    auto k = static_cast<std::size_t>(scaled);
    if (k >= cells)
        k = cells - 1;
    double frac = scaled - static_cast<double>(k);
    if (frac == 0.0)
        return values_[k]; // exact at table cells
    return values_[k] + frac * (values_[k + 1] - values_[k]);
}

TableInverse::TableInverse(const DyadicTable& table)
    : values_(table.values), depth_(table.depth) {
    require_monotone(table);
}

double TableInverse::operator()(double x) const {
    const double denom = static_cast<double>(std::size_t{1} << depth_);
    if (x <= values_.front())
        return 0.0;
    if (x >= values_.back())
        return 1.0;
    // cell k with values[k] <= x < values[k+1]
    auto it = std::upper_bound(values_.begin(), values_.end(), x);
    auto k = static_cast<std::size_t>(it - values_.begin()) - 1;
    if (x == values_[k])
        return static_cast<double>(k) / denom; // exact at table cells
    double frac = (x - values_[k]) / (values_[k + 1] - values_[k]);
    return (static_cast<double>(k) + frac) / denom;
}

TableInverse invert_table(const DyadicTable& table) { return TableInverse(table); }

BinaryMap reconstruct_map(const DyadicTable& table) {
    TableInterpolant fwd(table);
    TableInverse inv(table);
    return BinaryMap("reconstructed(" + std::to_string(table.depth) + ")",
                     MapKind::GeneratorBased, Interval(table.u, table.v),
                     [fwd, inv](double x, double y) {
                         double mid = (inv(x) + inv(y)) / 2.0;
                         return fwd(mid);
                     });
}

ReconstructionReport roundtrip_residual(const BinaryMap& f, double u, double v, int depth,
                                        const SampleGrid& grid) {
    if (grid.points.front() < u || grid.points.back() > v)
        throw Error(errc::invalid_grid, "grid must be contained in [u, v]");
    DyadicTable table = build_dyadic_table(f, u, v, depth);
    BinaryMap rec = reconstruct_map(table);

    // The reconstruction lives on [u, v] which may be narrower than the
    // map's own domain; compare through a view restricted to [u, v].
    BinaryMap f_view("view", f.kind(), Interval(u, v), [f](double x, double y) { return f(x, y); });

    ReconstructionReport out{grid, 0.0, 0.0, 0.0, 0.0};
    auto res = kernels::max_abs_diff(f_view, rec, grid.points, grid.points);
    out.max_abs_residual = res.value;
    out.argmax_x = res.x;
    out.argmax_y = res.y;
    auto defect = kernels::max_abs_diff(f_view, swap_arguments(f_view), grid.points, grid.points);
    out.symmetric_defect = defect.value;
    return out;
}

PropertyReport check_dyadic_identity(const DyadicTable& table, const BinaryMap& f,
                                     std::optional<double> tol) {
    PropertyReport r;
    r.property = "dyadic-identity";
    r.tolerance = tol.value_or(eps_eq(Interval(table.u, table.v)));
    const auto& vals = table.values;
    const std::size_t m = vals.size();
    const Interval& dom = f.domain();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || ((i + j) & 1u) != 0)
                continue; // midpoint must land on this table's lattice
            double lhs = vals[(i + j) / 2];
            double rhs = f(dom.clamp(vals[i]), dom.clamp(vals[j]));
            r.samples_checked++;
            double d = lhs - rhs;
            if (std::abs(d) > r.tolerance) {
                r.truncated_count++;
                if (r.witnesses.size() < kMaxWitnesses)
                    r.witnesses.push_back(
                        Witness{{table.dyadic(i), table.dyadic(j)}, lhs, rhs, d, {}});
            }
        }
    }
    r.verdict = r.truncated_count == 0 ? Verdict::HoldsOnSample : Verdict::Fails;
    return r;
}

} // namespace bisym
