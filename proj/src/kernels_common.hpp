#pragma once

// Shared slab workers for the sweep kernels. Each sweep is decomposed into
// independent slabs indexed by the outermost grid index; the serial and
// OpenMP variants only differ in how the slab loop runs. Slab results are
// merged in index order, which fixes witness order and argmax tie-breaking
// independently of thread count.

#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <vector>

#include "bisym/binary_map.hpp"
#include "bisym/kernels.hpp"

namespace bisym::kernels::detail {

// Full ordered pair table P[i*n+j] = F(pts[i], pts[j]).
inline std::vector<double> pair_table(const BinaryMap& f, std::span<const double> pts) {
    const std::size_t n = pts.size();
    std::vector<double> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = f(pts[i], pts[j]);
    return table;
}

struct PairSlab {
    std::vector<std::uint8_t> symmetric;
    std::vector<double> diff;
    std::uint64_t symmetric_pairs = 0;
    std::uint64_t asymmetric_pairs = 0;
};

inline PairSlab pair_slab(const BinaryMap& f, std::span<const double> pts, double tol,
                          std::size_t i) {
    const std::size_t n = pts.size();
    PairSlab slab;
    slab.symmetric.reserve(n - i - 1);
    slab.diff.reserve(n - i - 1);
    for (std::size_t j = i + 1; j < n; ++j) {
        double d = f(pts[i], pts[j]) - f(pts[j], pts[i]);
        bool sym = std::abs(d) <= tol;
        slab.symmetric.push_back(sym ? 1 : 0);
        slab.diff.push_back(d);
        (sym ? slab.symmetric_pairs : slab.asymmetric_pairs)++;
    }
    return slab;
}

struct QuadSlab {
    std::vector<Witness> witnesses;
    std::uint64_t violation_count = 0;
    std::uint64_t codomain_violations = 0;
};

inline QuadSlab quad_slab(const BinaryMap& f, std::span<const double> pts,
                          std::span<const double> table, double tol, std::size_t witness_cap,
                          std::size_t i) {
    const std::size_t n = pts.size();
    const Interval& dom = f.domain();
    QuadSlab slab;
    auto in_domain = [&](double v) { return v >= dom.lo - tol && v <= dom.hi + tol; };
    for (std::size_t j = 0; j < n; ++j) {
        const double fxy = table[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
            const double fxu = table[i * n + k];
            for (std::size_t l = 0; l < n; ++l) {
                const double fuv = table[k * n + l];
                const double fyv = table[j * n + l];
                if (!in_domain(fxy) || !in_domain(fuv) || !in_domain(fxu) || !in_domain(fyv)) {
                    slab.codomain_violations++;
                    continue;
                }
                double lhs = f(dom.clamp(fxy), dom.clamp(fuv));
                double rhs = f(dom.clamp(fxu), dom.clamp(fyv));
                double d = lhs - rhs;
                if (std::abs(d) > tol) {
                    slab.violation_count++;
                    if (slab.witnesses.size() < witness_cap)
                        slab.witnesses.push_back(
                            Witness{{pts[i], pts[j], pts[k], pts[l]}, lhs, rhs, d, {}});
                }
            }
        }
    }
    return slab;
}

struct TripleSlab {
    std::vector<Witness> witnesses;
    std::uint64_t violation_count = 0;
    std::uint64_t left_count = 0;
    std::uint64_t right_count = 0;
};

inline TripleSlab triple_slab(const BinaryMap& /*f*/, std::span<const double> pts,
                              std::span<const double> table, double tol, std::size_t witness_cap,
                              std::size_t i) {
    const std::size_t n = pts.size();
    TripleSlab slab;
    auto add = [&](std::size_t j, std::size_t k, double lhs, double rhs, const char* side) {
        slab.violation_count++;
        if (slab.witnesses.size() < witness_cap)
            slab.witnesses.push_back(Witness{{pts[i], pts[j], pts[k]}, lhs, rhs, lhs - rhs, side});
    };
    for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(pts[i] - pts[j]) <= tol)
            continue; // indistinguishable arguments cannot witness anything
        for (std::size_t k = 0; k < n; ++k) {
            double la = table[i * n + k], lb = table[j * n + k];
            if (std::abs(la - lb) <= tol) {
                slab.left_count++;
                add(j, k, la, lb, "left");
            }
            double ra = table[k * n + i], rb = table[k * n + j];
            if (std::abs(ra - rb) <= tol) {
                slab.right_count++;
                add(j, k, ra, rb, "right");
            }
        }
    }
    return slab;
}

struct RowMax {
    double value = -1.0;
    std::size_t j = 0;
    bool set = false;
};

inline RowMax residual_row(const BinaryMap& f, const BinaryMap& g, std::span<const double> xs,
                           std::span<const double> ys, std::size_t i) {
    RowMax row;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        double d = std::abs(f(xs[i], ys[j]) - g(xs[i], ys[j]));
        if (!row.set || d > row.value) {
            row.value = d;
            row.j = j;
            row.set = true;
        }
    }
    return row;
}

// Exceptions may not cross an OpenMP region; the first one is captured and
// rethrown after the join.
class ExceptionCollector {
public:
    template <typename F>
    void run(F&& fn) noexcept {
        if (failed_)
            return;
        try {
            fn();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (!ptr_) {
                ptr_ = std::current_exception();
                failed_ = true;
            }
        }
    }

    void rethrow() const {
        if (ptr_)
            std::rethrow_exception(ptr_);
    }

private:
    std::exception_ptr ptr_;
    std::mutex mutex_;
    volatile bool failed_ = false;
};

inline PairSweep merge_pair_slabs(std::vector<PairSlab>&& slabs, std::size_t n) {
    PairSweep out;
    out.symmetric.reserve(pair_count(n));
    out.diff.reserve(pair_count(n));
    for (auto& s : slabs) {
        out.symmetric.insert(out.symmetric.end(), s.symmetric.begin(), s.symmetric.end());
        out.diff.insert(out.diff.end(), s.diff.begin(), s.diff.end());
        out.symmetric_pairs += s.symmetric_pairs;
        out.asymmetric_pairs += s.asymmetric_pairs;
    }
    return out;
}

inline QuadSweep merge_quad_slabs(std::vector<QuadSlab>&& slabs, std::size_t n,
                                  std::size_t witness_cap) {
    QuadSweep out;
    out.quadruples = n * n * n * n;
    for (auto& s : slabs) {
        out.violation_count += s.violation_count;
        out.codomain_violations += s.codomain_violations;
        for (auto& w : s.witnesses) {
            if (out.witnesses.size() < witness_cap)
                out.witnesses.push_back(std::move(w));
        }
    }
    return out;
}

inline TripleSweep merge_triple_slabs(std::vector<TripleSlab>&& slabs, std::size_t n,
                                      std::size_t witness_cap) {
    TripleSweep out;
    out.checks = 2 * (pair_count(n)) * n;
    for (auto& s : slabs) {
        out.violation_count += s.violation_count;
        out.left_count += s.left_count;
        out.right_count += s.right_count;
        for (auto& w : s.witnesses) {
            if (out.witnesses.size() < witness_cap)
                out.witnesses.push_back(std::move(w));
        }
    }
    return out;
}

inline MaxAbsDiff merge_rows(const std::vector<RowMax>& rows, std::span<const double> xs,
                             std::span<const double> ys) {
    MaxAbsDiff out;
    bool seen = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].set)
            continue;
        if (!seen || rows[i].value > out.value) {
            out.value = rows[i].value;
            out.x = xs[i];
            out.y = ys[rows[i].j];
            seen = true;
        }
    }
    return out;
}

} // namespace bisym::kernels::detail
