#pragma once

#include <optional>
#include <string>

#include "tokenslide/family.hpp"
#include "tokenslide/graph.hpp"

namespace tokenslide {

struct SearchBudget {
    int max_host_vertices = 0;
    std::optional<double> max_seconds;
    std::optional<long> max_candidates;
};

struct SearchOutcome {
    std::optional<Graph> found;
    bool exhausted = false;
    long candidates_checked = 0;
    SearchBudget bound_used;
};

enum class ScanMode { serial, parallel, automatic };

// Runtime default scan mode; `automatic` follows TOKENSLIDE_THREADS (> 1 or
// unset picks the OpenMP path).
void set_scan_mode(ScanMode m);
ScanMode scan_mode();

// First host (in enumeration order, by vertex count then class index) whose
// TS_k is isomorphic to target. Hosts whose size-k independent-set count
// differs from |V(target)| are pruned before building edges.
SearchOutcome find_ts_preimage(const Graph& target, int k, const SearchBudget& budget);

// First host whose TS_k is a tree containing target as an induced subgraph.
SearchOutcome find_ts_tree_containing(const Graph& target, int k, const SearchBudget& budget);

enum class NegativeFamily { d1n2, dr2s, k1n };

// Bounded corroboration of a known negative regime: errors out when
// the parameters are in the positive (realizable) regime.
SearchOutcome negative_certificate(NegativeFamily family, const std::vector<int>& params, int k,
                                   const SearchBudget& budget);

}  // namespace tokenslide
