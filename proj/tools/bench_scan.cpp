// Compares the serial reference scan against the OpenMP scan on the two
// enumeration-heavy workloads: preimage search and the conjecture sweep.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/family.hpp"
#include "tokenslide/forbidden.hpp"
#include "tokenslide/search.hpp"

using namespace tokenslide;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double time_scan(const Graph& target, int k, int max_n, ScanMode mode, bool containing) {
    set_scan_mode(mode);
    SearchBudget budget;
    budget.max_host_vertices = max_n;
    Clock::time_point t0 = Clock::now();
    SearchOutcome o =
        containing ? find_ts_tree_containing(target, k, budget) : find_ts_preimage(target, k, budget);
    double dt = seconds_since(t0);
    std::printf("    checked %ld candidates, %s\n", o.candidates_checked,
                o.found ? "found" : "exhausted");
    return dt;
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 8;
    std::printf("threads available: %d\n", omp_get_max_threads());

    // warm the enumeration cache so both modes scan the same data
    for (int n = 0; n <= max_n; ++n) enumerated_graphs(n);

    struct Case {
        const char* name;
        Graph target;
        int k;
        bool containing;
    };
    std::vector<Case> cases = {
        {"preimage K_{1,3}, k=2", generate(star_spec(3)), 2, false},
        {"preimage D_{1,4,2}, k=2", generate(dumbbell_spec(1, 4, 2)), 2, false},
        {"preimage C_6, k=3", generate(cycle_spec(6)), 3, false},
        {"TS-tree containing K_{1,5}, k=2", generate(star_spec(5)), 2, true},
        {"TS-tree containing spider, k=2",
         make_graph(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}}), 2, true},
    };
    for (const Case& c : cases) {
        std::printf("%s (hosts up to %d vertices)\n", c.name, max_n);
        std::printf("  serial:\n");
        double ts = time_scan(c.target, c.k, max_n, ScanMode::serial, c.containing);
        std::printf("  parallel:\n");
        double tp = time_scan(c.target, c.k, max_n, ScanMode::parallel, c.containing);
        std::printf("  serial %.3fs, parallel %.3fs, speedup %.2fx\n", ts, tp, ts / tp);
    }

    std::printf("conjecture scan k=4, forests up to 8 vertices\n");
    Clock::time_point t0 = Clock::now();
    omp_set_num_threads(1);
    ConjectureReport serial = conjecture_scan(4, 8);
    double ts = seconds_since(t0);
    omp_set_num_threads(omp_get_num_procs());
    t0 = Clock::now();
    ConjectureReport parallel = conjecture_scan(4, 8);
    double tp = seconds_since(t0);
    std::printf("  checked %ld forests; serial %.3fs, parallel %.3fs, speedup %.2fx\n",
                serial.forests_checked, ts, tp, ts / tp);
    if (serial.counterexample.has_value() != parallel.counterexample.has_value())
        std::printf("  MISMATCH between serial and parallel results!\n");
    set_scan_mode(ScanMode::automatic);
    return 0;
}
