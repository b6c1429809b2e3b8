#pragma once

#include <string>
#include <vector>

#include "tokenslide/graph.hpp"

namespace tokenslide {

// Rooted tree as a parent array: parent[0] == -1, parent[i] < i.
struct RootedTree {
    std::vector<int> parent;

    int size() const { return static_cast<int>(parent.size()); }
    std::vector<std::vector<int>> children() const;
    int max_arity() const;
    int height() const;
    Graph to_graph() const;  // underlying unrooted tree
    void validate() const;
};

// Roots the tree at `root`; child order follows increasing vertex id.
RootedTree root_tree_at(const Graph& tree, int root);

struct FamilySpec {
    enum class Kind {
        path,               // params: n
        cycle,              // params: n (n >= 3)
        complete,           // params: n
        complete_bipartite, // params: m, n
        star,               // params: n  (K_{1,n})
        matching_plus_isolated, // params: m, n  (mK_2 + nK_1)
        dumbbell,           // params: r, n, s  (D_{r,n,s})
        kary_tree,          // params: arity; parents: rooted tree
    };

    Kind kind;
    std::vector<int> params;
    std::vector<int> parents;  // kary_tree only

    void validate() const;
    std::string name() const;
};

// Dumbbell vertices carry labels u1..ur, p1..pn, v1..vs; other families are
// unlabelled.
Graph generate(const FamilySpec& spec);

FamilySpec path_spec(int n);
FamilySpec cycle_spec(int n);
FamilySpec complete_spec(int n);
FamilySpec complete_bipartite_spec(int m, int n);
FamilySpec star_spec(int n);
FamilySpec matching_spec(int m, int n_isolated);
FamilySpec dumbbell_spec(int r, int n, int s);
FamilySpec kary_tree_spec(int arity, std::vector<int> parents);

}  // namespace tokenslide
