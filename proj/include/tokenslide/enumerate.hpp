#pragma once

#include <string>
#include <vector>

#include "tokenslide/family.hpp"
#include "tokenslide/graph.hpp"

namespace tokenslide {

enum class GraphFilter { none, connected, tree, forest };

// One representative per isomorphism class, deterministic order. Built by
// extending each (n-1)-vertex class with every possible neighborhood of a
// new vertex and de-duplicating. Hard cap n <= 9.
std::vector<Graph> enumerate_graphs(int n, GraphFilter filter = GraphFilter::none);

// Cached variant (unfiltered); the cache is filled on first use.
const std::vector<Graph>& enumerated_graphs(int n);

// Non-isomorphic free trees on n vertices (n >= 1), by leaf extension and
// canonical-string de-duplication.
std::vector<Graph> enumerate_trees(int n);

// Non-isomorphic forests on n vertices, as multisets of trees.
std::vector<Graph> enumerate_forests(int n);

// Non-isomorphic rooted trees on n nodes with every node having at most
// max_arity children, as parent arrays.
std::vector<RootedTree> enumerate_rooted_trees(int n, int max_arity);

// AHU-style canonical encoding of a free tree (rooted at its centroid set);
// equal strings iff isomorphic trees.
std::string tree_canonical_string(const Graph& tree);
std::string rooted_canonical_string(const RootedTree& t);

}  // namespace tokenslide
