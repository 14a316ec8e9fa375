// Benchmark comparing the serial reference kernels against the OpenMP
// variants, verifying on the way that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "bisym/builtins.hpp"
#include "bisym/grid.hpp"
#include "bisym/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bisym;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock_type::now();
        fn();
        auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, std::size_t items, double serial_ms, double omp_ms,
            bool match) {
    std::printf("%-28s %12zu %12.2f %12.2f %9.2fx   %s\n", name.c_str(), items, serial_ms,
                omp_ms, serial_ms / omp_ms, match ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP: both columns run the serial code\n");
#endif
    std::printf("%-28s %12s %12s %12s %10s\n", "kernel", "items", "serial ms", "openmp ms",
                "speedup");

    const Interval unit(0.0, 1.0);
    BinaryMap f1 = builtin("paper-example-1", unit);
    BinaryMap f2 = builtin("paper-example-2", unit);
    BinaryMap pw2 = builtin("power(2)", Interval(1.0, 2.0));

    {
        auto grid = make_grid(unit, 1001);
        double tol = eps_eq(unit);
        kernels::PairSweep a, b;
        double ts = time_ms([&] { a = kernels::symmetry_pairs_serial(f1, grid.points, tol); }, 3);
        double to = time_ms([&] { b = kernels::symmetry_pairs_omp(f1, grid.points, tol); }, 3);
        bool ok = a.symmetric == b.symmetric && a.diff == b.diff &&
                  a.asymmetric_pairs == b.asymmetric_pairs;
        report("symmetry pairs n=1001", a.symmetric.size(), ts, to, ok);
    }

    {
        auto grid = make_grid(unit, 33);
        double tol = eps_eq(unit);
        kernels::QuadSweep a, b;
        double ts =
            time_ms([&] { a = kernels::bisymmetry_sweep_serial(f1, grid.points, tol); }, 3);
        double to = time_ms([&] { b = kernels::bisymmetry_sweep_omp(f1, grid.points, tol); }, 3);
        bool ok = a.violation_count == b.violation_count &&
                  a.codomain_violations == b.codomain_violations &&
                  a.witnesses.size() == b.witnesses.size();
        for (std::size_t i = 0; ok && i < a.witnesses.size(); ++i)
            ok = a.witnesses[i].inputs == b.witnesses[i].inputs &&
                 a.witnesses[i].lhs == b.witnesses[i].lhs;
        report("bisymmetry sweep n=33", a.quadruples, ts, to, ok);
    }

    {
        auto grid = make_grid(unit, 101);
        double tol = eps_eq(unit);
        kernels::TripleSweep a, b;
        double ts =
            time_ms([&] { a = kernels::cancellativity_sweep_serial(f2, grid.points, tol); }, 3);
        double to =
            time_ms([&] { b = kernels::cancellativity_sweep_omp(f2, grid.points, tol); }, 3);
        bool ok = a.violation_count == b.violation_count && a.left_count == b.left_count &&
                  a.right_count == b.right_count;
        report("cancellativity sweep n=101", a.checks, ts, to, ok);
    }

    {
        auto grid = make_grid(Interval(1.0, 2.0), 1501);
        BinaryMap swapped = swap_arguments(pw2);
        kernels::MaxAbsDiff a, b;
        double ts = time_ms(
            [&] { a = kernels::max_abs_diff_serial(pw2, swapped, grid.points, grid.points); }, 3);
        double to = time_ms(
            [&] { b = kernels::max_abs_diff_omp(pw2, swapped, grid.points, grid.points); }, 3);
        bool ok = a.value == b.value && a.x == b.x && a.y == b.y;
        report("residual grid 1501x1501", grid.points.size() * grid.points.size(), ts, to, ok);
    }

    return 0;
}
