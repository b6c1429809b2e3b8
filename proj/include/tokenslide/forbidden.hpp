#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenslide/family.hpp"
#include "tokenslide/graph.hpp"
#include "tokenslide/iso.hpp"

namespace tokenslide {

enum class TreeClass { star, d1ns, drns };  // K_{1,s} / D_{1,n<=4,s} / D_{r>=2,n<=3,s}

struct AcyclicityVerdict {
    bool acyclic = false;
    std::optional<Embedding> witness;  // forbidden pattern into the input
    std::string pattern_name;
    std::optional<TreeClass> classification;
    std::optional<FamilySpec> family;  // spec matching the classification
};

struct DbParams {
    enum class Variant { a, b, c };  // 2K_2+nK_1 / D_{1,n,s} / D_{r,n,s} with r,s >= 2
    Variant variant;
    int k = 0;
    int n = 0;
    int r = 1;
    int s = 1;
};

enum class CycleKind { none, c4, c8 };

struct DbPrediction {
    bool cyclic = false;
    CycleKind cycle_kind = CycleKind::none;
};

// The threshold lemma: variant (a) cyclic iff n >= k-2 (C_4); (b) cyclic iff
// n >= 2k-1 (C_4); (c) cyclic iff n >= 2k-2 (C_8). Variants (b),(c) are
// stated only for k in {2,3}.
DbPrediction lemma_db_predict(const DbParams& p);

// Acyclicity of TS_2 over trees: forbidden {2K_2, D_{2,2,2}}.
AcyclicityVerdict check_tree_k2(const Graph& t);
// Forest version, same pattern set.
AcyclicityVerdict check_forest_k2(const Graph& f);
// TS_3 over trees: forbidden {2K_2+K_1, D_{2,4,2}}.
AcyclicityVerdict check_tree_k3(const Graph& t);
// TS_3 over forests: forbidden {2K_2+K_1, D_{2,2,2}+K_1, D_{2,4,2}}.
AcyclicityVerdict check_forest_k3(const Graph& f);

struct K4Verdict {
    bool forces_cycle = false;
    std::optional<Embedding> witness;
    std::string pattern_name;
};

// Sufficient (not necessary) condition for TS_k(F) to contain a cycle,
// k >= 4: an induced 2K_2+(k-2)K_1, D_{2,2,2}+(k-2)K_1 or D_{2,4,2}+(k-3)K_1.
K4Verdict k4_cycle_sufficient(const Graph& f, int k);

struct ConjectureReport {
    std::optional<Graph> counterexample;
    long forests_checked = 0;
    bool budget_exhausted = false;
};

// Scans all forests up to max_vertices for one whose TS_k is acyclic yet
// contains one of the k >= 4 patterns induced. max_candidates < 0: no cap.
ConjectureReport conjecture_scan(int k, int max_vertices, long max_candidates = -1);

// The catalogue of small graphs with cyclic TS_2: exactly the minimal such
// graphs on 4..7 vertices (complements of cycles excluded), frozen as data.
std::vector<std::pair<Graph, std::string>> figure2_fixtures();

}  // namespace tokenslide
