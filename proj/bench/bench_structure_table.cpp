// Times the parallel per-class sweep against the serial definition-driven
// reference on a family of full Young sets, and confirms the two tables
// agree.  Usage: bench_structure_table [n_max] (default 4; n=5 takes a few
// minutes in the reference implementation).

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "young_endo/endo_algebra.hpp"
#include "young_endo/parallel.hpp"

using namespace young_endo;
using clock_type = std::chrono::steady_clock;

namespace {
double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}
} // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 4;
    if (n_max < 2 || n_max > 7) {
        std::cerr << "n_max must be between 2 and 7\n";
        return 1;
    }
    std::cout << "n  classes  points   serial_ref[s]  parallel[s]  speedup  match\n";
    for (int n = 2; n <= n_max; ++n) {
        auto alg = OrbitAlgebra::build(YoungSet(n, partitions_of(n)));

        auto t0 = clock_type::now();
        auto reference = build_structure_table_reference(alg);
        double serial = seconds_since(t0);

        t0 = clock_type::now();
        auto parallel = build_structure_table(alg, thread_budget());
        double par = seconds_since(t0);

        bool match = reference == parallel;
        std::printf("%-2d %-8d %-8lld %-14.3f %-12.3f %-8.2f %s\n", n,
                    alg.class_count(), alg.point_total(), serial, par,
                    par > 0 ? serial / par : 0.0, match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
