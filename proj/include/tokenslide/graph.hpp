#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tokenslide {

// Simple undirected labelled graph. Vertex ids are dense 0..n-1; the
// adjacency matrix is kept as bit rows. Labels are an optional sidecar:
// either empty or one distinct string per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ull;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;
    std::vector<std::pair<int, int>> edges() const;

    bool labelled() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int u) const { return labels_[u]; }
    void set_labels(std::vector<std::string> labels);
    void clear_labels() { labels_.clear(); }
    // -1 if absent
    int vertex_of_label(const std::string& s) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_ && labels_ == other.labels_;
    }

    // Raw row access for hot loops; valid while the graph is alive.
    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
    int words() const { return words_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::string> labels_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::string> labels);

Graph complement(const Graph& g);
// Vertex ids of h are shifted by g.n(); clashing labels of h are freshened.
Graph disjoint_union(const Graph& g, const Graph& h);
// Ids compacted in the sorted order of s; labels preserved.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph permuted(const Graph& g, const std::vector<int>& perm);  // vertex u -> perm[u]

struct StructureInfo {
    bool is_connected = false;
    bool is_tree = false;
    bool is_forest = false;
    bool has_cycle = false;
    int component_count = 0;
    std::vector<int> component_of;
};

StructureInfo structure_queries(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace tokenslide
