#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenslide/graph.hpp"
#include "tokenslide/ts.hpp"

namespace tokenslide {

// Two labelled graphs sharing a common induced subgraph H. Vertex identity
// across the two is by label, never by id.
struct JoinContext {
    Graph g1, g2;
    std::vector<std::string> shared;  // sorted labels of V(G1) n V(G2)
    Graph h;                          // subgraph induced by shared (from g1)
};

// Builds the context iff the induced subgraphs on the shared labels agree
// edge for edge; otherwise returns nullopt and sets *why.
std::optional<JoinContext> h_consistent(const Graph& g1, const Graph& g2, std::string* why = nullptr);

// Union of both edge sets plus the complete bipartite join between the two
// private vertex sets. Vertex order: g1's vertices, then g2's private ones.
Graph h_join(const JoinContext& ctx);

// Pair of size-k independent sets (one per side, neither inside H) sharing
// exactly k-1 vertices, all inside H. Each such pair is an extra TS edge.
struct CrossingPair {
    std::vector<std::string> s1, s2;  // sorted label sets
};

std::vector<CrossingPair> crossing_pairs(const JoinContext& ctx, int k);
bool is_crossing_free(const JoinContext& ctx, int k);

struct UnionReport {
    bool holds = false;
    // extra skeleton edges of the join beyond the union, as label-set pairs
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> extra_edges;
};

UnionReport verify_union(const JoinContext& ctx, int k);

struct Decomposition {
    Graph g1, g2;
    JoinContext ctx;
};

// Components of complement(g) - W, deterministic order (by least vertex).
std::vector<std::vector<int>> complement_components(const Graph& g, const std::vector<std::string>& w);

// W is a label set that must be a cut-set of the complement (or empty with
// the complement disconnected); side1 lists component indices (as returned
// by complement_components) assigned to side 1.
Decomposition h_decompose(const Graph& g, const std::vector<std::string>& w,
                          const std::vector<int>& side1);

}  // namespace tokenslide
