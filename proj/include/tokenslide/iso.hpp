#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tokenslide/graph.hpp"

namespace tokenslide {

// Injective vertex map pattern -> host with edges and non-edges preserved
// among mapped pairs (induced embedding).
struct Embedding {
    std::vector<int> map;
};

// Deterministic: when an isomorphism exists, the lexicographically least map
// (in pattern-vertex order 0..n-1) is returned.
std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// Lexicographically least induced embedding of pattern into host, or none.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

// Calls fn for each induced embedding in lexicographic order until fn
// returns false. Returns true if some call returned false (early stop).
bool for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const Embedding&)>& fn);

// Induced copy of pattern + m isolated vertices: an induced embedding of
// `pattern` plus an independent set of m vertices with no edges to the
// image. Returned map lists pattern vertices first, then the m extras.
std::optional<Embedding> find_induced_plus_isolated(const Graph& host, const Graph& pattern, int m);

uint64_t automorphism_count(const Graph& g);

bool has_induced_cycle(const Graph& g, int length);

}  // namespace tokenslide
