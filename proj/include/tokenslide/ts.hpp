#pragma once

#include <string>
#include <vector>

#include "tokenslide/graph.hpp"

namespace tokenslide {

// A size-k independent set of the host, kept sorted ascending.
using TokenSet = std::vector<int>;

// The token sliding graph TS_k(host). skeleton vertex i corresponds to
// node_sets[i]; node_sets holds every size-k independent set exactly once,
// in lexicographic order. Skeleton edge (i,j) iff the two sets differ in one
// vertex pair joined by a host edge.
struct TSGraph {
    Graph host;
    int k = 0;
    Graph skeleton;
    std::vector<TokenSet> node_sets;

    int index_of(const TokenSet& s) const;  // -1 if absent
    std::vector<std::string> node_label_sets(int i) const;  // host labels of set i
};

std::vector<TokenSet> independent_sets(const Graph& g, int k);

// Count of size-k independent sets, stopping early once the count exceeds
// `cap` (returns cap+1 in that case).
long count_independent_sets_capped(const Graph& g, int k, long cap);

TSGraph build_ts(const Graph& g, int k);

std::vector<TokenSet> slide_neighbors(const Graph& g, const TokenSet& tokens);

bool ts_acyclic_bruteforce(const Graph& g, int k);

bool is_independent(const Graph& g, const TokenSet& tokens);

// Joined host labels of a token set, e.g. "a,c"; falls back to ids.
std::string token_label(const Graph& host, const TokenSet& tokens);

}  // namespace tokenslide
