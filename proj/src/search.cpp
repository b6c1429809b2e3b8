#include "tokenslide/search.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/iso.hpp"
#include "tokenslide/ts.hpp"

namespace tokenslide {

namespace {

ScanMode g_mode = ScanMode::automatic;

bool use_parallel() {
    if (g_mode == ScanMode::serial) return false;
    if (g_mode == ScanMode::parallel) return true;
    const char* env = std::getenv("TOKENSLIDE_THREADS");
    if (env) {
        int t = std::atoi(env);
        if (t == 1) return false;
        if (t > 1) omp_set_num_threads(t);
    }
    return true;
}

using Clock = std::chrono::steady_clock;

struct ScanResult {
    long hit = -1;  // least index matching, -1 if none
    long checked = 0;
    bool completed = true;  // false when a budget stopped the scan early
};

// Serial reference scan: kept alongside the OpenMP kernel and compared
// against it in the tests.
ScanResult scan_serial(long count, const std::function<bool(long)>& pred, Clock::time_point deadline,
                       bool has_deadline, long remaining_candidates) {
    ScanResult r;
    for (long i = 0; i < count; ++i) {
        if (remaining_candidates >= 0 && r.checked >= remaining_candidates) {
            r.completed = false;
            return r;
        }
        if (has_deadline && Clock::now() >= deadline) {
            r.completed = false;
            return r;
        }
        ++r.checked;
        if (pred(i)) {
            r.hit = i;
            return r;
        }
    }
    return r;
}

// OpenMP scan with deterministic least-index reduction: a chunk is skipped
// only when a hit with a smaller index is already known, so the reported
// winner never depends on thread timing.
ScanResult scan_parallel(long count, const std::function<bool(long)>& pred, Clock::time_point deadline,
                         bool has_deadline, long remaining_candidates) {
    ScanResult r;
    std::atomic<long> best(count);
    std::atomic<long> checked(0);
    std::atomic<bool> stopped(false);
    const long chunk = 64;
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < (count + chunk - 1) / chunk; ++c) {
        long lo = c * chunk, hi = std::min(count, lo + chunk);
        if (lo >= best.load()) continue;
        if (stopped.load()) continue;
        for (long i = lo; i < hi && i < best.load(); ++i) {
            if (remaining_candidates >= 0 && checked.load() >= remaining_candidates) {
                stopped.store(true);
                break;
            }
            if (has_deadline && Clock::now() >= deadline) {
                stopped.store(true);
                break;
            }
            checked.fetch_add(1);
            if (pred(i)) {
                long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    }
    r.checked = checked.load();
    r.completed = !stopped.load();
    if (best.load() < count) {
        r.hit = best.load();
        // Without a time/candidate budget every index below the hit was
        // resolved, so the hit is the least one. Under a budget stop the
        // witness is still valid but least-index is no longer guaranteed.
        r.completed = true;
    }
    return r;
}

SearchOutcome run_scan(const SearchBudget& budget, const std::function<bool(const Graph&)>& accept) {
    if (budget.max_host_vertices < 1 && !budget.max_candidates && !budget.max_seconds)
        throw std::invalid_argument("search budget must bound something");
    SearchOutcome out;
    out.bound_used = budget;
    bool has_deadline = budget.max_seconds.has_value();
    Clock::time_point deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.max_seconds.value_or(0.0)));
    bool parallel = use_parallel();
    bool timed_out = false;
    for (int n = 0; n <= budget.max_host_vertices && !timed_out; ++n) {
        const std::vector<Graph>& cands = enumerated_graphs(n);
        long remaining = budget.max_candidates ? *budget.max_candidates - out.candidates_checked : -1;
        if (budget.max_candidates && remaining <= 0) {
            timed_out = true;
            break;
        }
        std::function<bool(long)> pred = [&](long i) { return accept(cands[i]); };
        ScanResult r = (parallel ? scan_parallel : scan_serial)(
            static_cast<long>(cands.size()), pred, deadline, has_deadline, remaining);
        out.candidates_checked += r.checked;
        if (r.hit >= 0) {
            out.found = cands[r.hit];
            out.exhausted = false;
            return out;
        }
        if (!r.completed) timed_out = true;
    }
    out.exhausted = !timed_out;
    return out;
}

}  // namespace

void set_scan_mode(ScanMode m) { g_mode = m; }
ScanMode scan_mode() { return g_mode; }

SearchOutcome find_ts_preimage(const Graph& target, int k, const SearchBudget& budget) {
    if (target.n() < 1) throw std::invalid_argument("target must be nonempty");
    long want_nodes = target.n();
    auto accept = [&](const Graph& host) {
        if (count_independent_sets_capped(host, k, want_nodes) != want_nodes) return false;
        TSGraph ts = build_ts(host, k);
        return is_isomorphic(ts.skeleton, target);
    };
    SearchOutcome out = run_scan(budget, accept);
    if (out.found) {
        // re-verify before returning
        TSGraph ts = build_ts(*out.found, k);
        if (!is_isomorphic(ts.skeleton, target)) throw std::logic_error("search returned a bad host");
    }
    return out;
}

SearchOutcome find_ts_tree_containing(const Graph& target, int k, const SearchBudget& budget) {
    if (!structure_queries(target).is_tree) throw std::invalid_argument("target must be a tree");
    int want_max_degree = 0;
    for (int v = 0; v < target.n(); ++v) want_max_degree = std::max(want_max_degree, target.degree(v));
    auto accept = [&](const Graph& host) {
        long nodes = count_independent_sets_capped(host, k, 100000);
        if (nodes < target.n()) return false;
        TSGraph ts = build_ts(host, k);
        StructureInfo info = structure_queries(ts.skeleton);
        if (!info.is_tree) return false;
        int md = 0;
        for (int v = 0; v < ts.skeleton.n(); ++v) md = std::max(md, ts.skeleton.degree(v));
        if (md < want_max_degree) return false;
        return find_induced(ts.skeleton, target).has_value();
    };
    return run_scan(budget, accept);
}

SearchOutcome negative_certificate(NegativeFamily family, const std::vector<int>& params, int k,
                                   const SearchBudget& budget) {
    Graph target(0);
    switch (family) {
        case NegativeFamily::d1n2: {
            if (params.size() != 1) throw std::invalid_argument("d1n2 takes params {n}");
            int n = params[0];
            if (k != 2) throw std::invalid_argument("the D_{1,n,2} characterization is for k = 2");
            if (n == 3) throw std::invalid_argument("D_{1,3,2} is realizable; not a negative instance");
            target = generate(dumbbell_spec(1, n, 2));
            break;
        }
        case NegativeFamily::dr2s: {
            if (params.size() != 2) throw std::invalid_argument("dr2s takes params {r,s}");
            int r = params[0], s = params[1];
            if (r > s) throw std::invalid_argument("dr2s expects r <= s");
            if (s <= k - 1) throw std::invalid_argument("s <= k-1 is realizable; not a negative instance");
            target = generate(dumbbell_spec(r, 2, s));
            break;
        }
        case NegativeFamily::k1n: {
            if (params.size() != 1) throw std::invalid_argument("k1n takes params {n}");
            int n = params[0];
            if (n <= k) throw std::invalid_argument("K_{1,n} with n <= k is realizable; not a negative instance");
            target = generate(star_spec(n));
            break;
        }
    }
    return find_ts_preimage(target, k, budget);
}

}  // namespace tokenslide
