#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tokenslide/family.hpp"
#include "tokenslide/graph.hpp"
#include "tokenslide/ts.hpp"

namespace tokenslide {

// Fresh-label factory. Reserved pools (a_i, b_i, c_i and their decorated
// variants) never collide with the "#n" fresh names.
struct LabelScheme {
    long counter = 0;
    std::string fresh() { return "#" + std::to_string(counter++); }
    static std::string a(int i) { return "a" + std::to_string(i); }
    static std::string b(int i) { return "b" + std::to_string(i); }
    static std::string b_sub(int j, int i) { return "b" + std::to_string(j) + "^" + std::to_string(i); }
    static std::string c(int i) { return "c" + std::to_string(i); }
    static std::string c_sub(int i, int j) { return "c" + std::to_string(i) + "_" + std::to_string(j); }
};

// Graph on the k+1 given labels with the single edge uv; its TS_k is K_2 on
// the tokens V-u and V-v.
Graph base_graph(const std::vector<std::string>& labels, const std::string& u, const std::string& v);

// Host whose TS_k is P_n, built by iterated joins of base graphs.
Graph realize_path(int k, int n);

// Host whose TS_k is K_{1,d}; requires d <= k.
Graph realize_star(int k, int d);

// Certificate for the canonical labelling of a realized k-ary tree:
// root I_{k+1}, children I_{k+1}-a_i+b_i, labels b_{d+1}..b_k unused, and
// every other node S has |I_{k+1} n S| <= k-1.
struct CanonicalCert {
    std::vector<std::string> root;                     // sorted label set
    std::vector<std::vector<std::string>> children;    // sorted label sets
    std::vector<std::string> unused_labels;
    std::map<std::string, int> depth;  // joined label -> depth in the tree
    int k = 0;
};

struct KaryRealization {
    Graph host;
    CanonicalCert cert;
};

// Host whose TS_{k+1} is isomorphic to the k-ary tree t.
KaryRealization realize_kary_tree(const RootedTree& t, int k);

bool validate_canonical(const TSGraph& ts, const CanonicalCert& cert);

// Certificate for the TS_2 well-labelling: root ab, children bc_1..bc_{d-1}
// and ac_d, a/b confined to those labels, c_i confined to subtree i.
struct WellLabelCert {
    std::string a, b;
    std::vector<std::string> c;                      // c_1..c_d (root's child labels)
    std::vector<std::string> root;                   // sorted label set {a,b}
    std::vector<std::vector<std::string>> children;  // sorted label sets
    int isolated = 0;
};

struct WellLabelRealization {
    Graph host;
    WellLabelCert cert;
    int isolated = 0;
    bool well_labelled = true;  // cert clauses hold (see well_label_tree notes)
    // token of each input tree vertex, as a sorted label set
    std::vector<std::vector<std::string>> node_tokens;
};

// Host with TS_2(host) isomorphic to t + nK_1, t well-labelled. Brooms,
// paths and stars come out of the join construction; other shapes fall back
// to hosts found by bounded exhaustive search (frozen here), not all of
// which admit a well-labelling — `well_labelled` reports whether the cert
// clauses hold. Throws when no host is known at all.
WellLabelRealization well_label_tree(const Graph& t);

bool validate_well_label(const TSGraph& ts, const WellLabelCert& cert);

// Tries to read a well-labelling off an arbitrary host with
// TS_2(host) = t + nK_1; fills *out and returns true on success.
bool extract_well_label(const Graph& host, const Graph& t, WellLabelRealization* out);

// Host whose TS_2 is a tree containing the 3-ary tree t induced.
Graph embed_3ary_in_ts2_tree(const Graph& t);

// Host whose TS_k is a tree with an induced K_{1,n}; n <= 2k.
Graph realize_k1n_in_tsk_tree(int k, int n);

// The six-vertex host with TS_2 = D_{1,3,2}.
Graph d132_witness();

// Host with TS_k = D_{r,2,s}; requires 1 <= r <= s <= k-1.
Graph realize_dr2s(int k, int r, int s);

// Forced host subgraph on {a..e} for each labelling of a K_{1,3} inside a
// TS_2 forest: (a) edges ad,de,eb,bc,cd; (b) edges bc,bd,be.
Graph k13_label_constraints(char variant);

}  // namespace tokenslide
