#include "tokenslide/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace tokenslide {

Graph::Graph(int n) : n_(n), words_(n == 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge rejected");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

int Graph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<size_t>(u) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (has_edge(u, v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (labels.empty()) {
        labels_.clear();
        return;
    }
    if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("label count != vertex count");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n_) throw std::invalid_argument("labels must be pairwise distinct");
    labels_ = std::move(labels);
}

int Graph::vertex_of_label(const std::string& s) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == s) return v;
    return -1;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::string> labels) {
    Graph g = make_graph(n, edges);
    g.set_labels(std::move(labels));
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    if (g.labelled()) c.set_labels(g.labels());
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph u(g.n() + h.n());
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(g.n() + a, g.n() + b);
    if (g.labelled() || h.labelled()) {
        std::vector<std::string> labels;
        std::set<std::string> seen;
        auto take = [&](const std::string& want) {
            std::string s = want;
            int suffix = 1;
            while (seen.count(s)) {
                s = want + "'" + (suffix > 1 ? std::to_string(suffix) : "");
                ++suffix;
            }
            seen.insert(s);
            labels.push_back(s);
        };
        for (int v = 0; v < g.n(); ++v) take(g.labelled() ? g.label(v) : "v" + std::to_string(v));
        for (int v = 0; v < h.n(); ++v) take(h.labelled() ? h.label(v) : "w" + std::to_string(v));
        u.set_labels(labels);
    }
    return u;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex id out of range");
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.labelled()) {
        std::vector<std::string> labels;
        for (int v : verts) labels.push_back(g.label(v));
        out.set_labels(labels);
    }
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    if (g.labelled()) {
        std::vector<std::string> labels(g.n());
        for (int v = 0; v < g.n(); ++v) labels[perm[v]] = g.label(v);
        out.set_labels(labels);
    }
    return out;
}

StructureInfo structure_queries(const Graph& g) {
    StructureInfo info;
    info.component_of.assign(g.n(), -1);
    int comp = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (info.component_of[s] != -1) continue;
        stack.push_back(s);
        info.component_of[s] = comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (info.component_of[v] == -1) {
                    info.component_of[v] = comp;
                    stack.push_back(v);
                }
            }
        }
        ++comp;
    }
    info.component_count = comp;
    int m = g.edge_count();
    info.is_connected = (comp <= 1);
    info.has_cycle = (m > g.n() - comp);  // per-component edge excess
    info.is_forest = !info.has_cycle;
    info.is_tree = info.is_connected && info.is_forest && g.n() >= 1;
    return info;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    StructureInfo info = structure_queries(g);
    std::vector<std::vector<int>> comps(info.component_count);
    for (int v = 0; v < g.n(); ++v) comps[info.component_of[v]].push_back(v);
    return comps;
}

}  // namespace tokenslide
