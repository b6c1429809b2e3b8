#include "tokenslide/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tokenslide/iso.hpp"

namespace tokenslide {

namespace {

// Cheap invariant used to bucket candidates before pairwise isomorphism
// tests: sorted degree sequence plus sorted multiset of neighbor-degree sums
// and per-vertex triangle counts.
std::string invariant_key(const Graph& g) {
    std::vector<int> deg(g.n()), nds(g.n(), 0), tri(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v);
        for (int u : nb) nds[v] += deg[u];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) ++tri[v];
    }
    std::vector<std::tuple<int, int, int>> sig(g.n());
    for (int v = 0; v < g.n(); ++v) sig[v] = {deg[v], nds[v], tri[v]};
    std::sort(sig.begin(), sig.end());
    std::string key;
    for (auto [a, b, c] : sig)
        key += std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(c) + ";";
    return key;
}

bool passes(const Graph& g, GraphFilter f) {
    switch (f) {
        case GraphFilter::none: return true;
        case GraphFilter::connected: return structure_queries(g).is_connected;
        case GraphFilter::tree: return structure_queries(g).is_tree;
        case GraphFilter::forest: return structure_queries(g).is_forest;
    }
    return true;
}

std::vector<Graph> enumerate_unfiltered(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > 9) throw std::invalid_argument("enumeration capped at 9 vertices");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> prev = enumerated_graphs(n - 1);
    std::vector<Graph> out;
    std::map<std::string, std::vector<int>> buckets;  // invariant -> indices in out
    for (const Graph& base : prev) {
        for (uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (int v = 0; v < n - 1; ++v)
                if (mask >> v & 1) g.add_edge(v, n - 1);
            std::string key = invariant_key(g);
            auto& bucket = buckets[key];
            bool fresh = true;
            for (int idx : bucket)
                if (is_isomorphic(out[idx], g)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                bucket.push_back(static_cast<int>(out.size()));
                out.push_back(g);
            }
        }
    }
    return out;
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> graph_cache;

}  // namespace

const std::vector<Graph>& enumerated_graphs(int n) {
    std::unique_lock<std::mutex> lock(cache_mutex);
    auto it = graph_cache.find(n);
    if (it != graph_cache.end()) return it->second;
    lock.unlock();
    std::vector<Graph> v = enumerate_unfiltered(n);
    lock.lock();
    return graph_cache.emplace(n, std::move(v)).first->second;
}

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter) {
    const std::vector<Graph>& all = enumerated_graphs(n);
    if (filter == GraphFilter::none) return all;
    std::vector<Graph> out;
    for (const Graph& g : all)
        if (passes(g, filter)) out.push_back(g);
    return out;
}

namespace {

std::string rooted_string(const Graph& tree, int root, int parent) {
    std::vector<std::string> parts;
    for (int v : tree.neighbors(root))
        if (v != parent) parts.push_back(rooted_string(tree, v, root));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
}

// One or two centroids of a tree.
std::vector<int> centroids(const Graph& tree) {
    int n = tree.n();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    std::vector<int> cur = layer;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : cur) {
            removed[v] = 1;
            --remaining;
            for (int u : tree.neighbors(v))
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        cur = std::move(next);
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) out.push_back(v);
    return out;
}

}  // namespace

std::string tree_canonical_string(const Graph& tree) {
    std::vector<int> cs = centroids(tree);
    std::string best;
    for (int c : cs) {
        std::string s = rooted_string(tree, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return std::to_string(cs.size()) + best;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("trees need >= 1 vertex");
    std::vector<Graph> cur = {Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : cur) {
            for (int attach = 0; attach < t.n(); ++attach) {
                Graph bigger(t.n() + 1);
                for (auto [u, v] : t.edges()) bigger.add_edge(u, v);
                bigger.add_edge(attach, t.n());
                next.emplace(tree_canonical_string(bigger), bigger);
            }
        }
        cur.clear();
        for (auto& [key, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

std::vector<Graph> enumerate_forests(int n) {
    if (n < 1) throw std::invalid_argument("forests need >= 1 vertex");
    std::vector<std::vector<Graph>> trees(n + 1);
    for (int s = 1; s <= n; ++s) trees[s] = enumerate_trees(s);

    std::vector<Graph> out;
    // A forest is a multiset of trees; pick components in non-increasing
    // (size, index) order so each multiset appears once.
    std::function<void(int, int, int, const Graph&)> go =
        [&](int remaining, int size_cap, int idx_cap, const Graph& acc) {
            if (remaining == 0) {
                out.push_back(acc);
                return;
            }
            for (int s = std::min(remaining, size_cap); s >= 1; --s) {
                int start = (s == size_cap) ? idx_cap : static_cast<int>(trees[s].size()) - 1;
                for (int i = start; i >= 0; --i)
                    go(remaining - s, s, i, disjoint_union(acc, trees[s][i]));
            }
        };
    go(n, n, static_cast<int>(trees[n].size()) - 1, Graph(0));
    return out;
}

std::vector<RootedTree> enumerate_rooted_trees(int n, int max_arity) {
    if (n < 1) throw std::invalid_argument("rooted trees need >= 1 node");
    std::vector<RootedTree> out;
    std::map<std::string, char> seen;
    for (const Graph& t : enumerate_trees(n)) {
        for (int root = 0; root < t.n(); ++root) {
            RootedTree rt = root_tree_at(t, root);
            if (rt.max_arity() > max_arity) continue;
            std::string key = rooted_canonical_string(rt);
            if (seen.emplace(key, 1).second) out.push_back(rt);
        }
    }
    return out;
}

namespace {

std::string rooted_string_rt(const std::vector<std::vector<int>>& ch, int v) {
    std::vector<std::string> parts;
    for (int c : ch[v]) parts.push_back(rooted_string_rt(ch, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
}

}  // namespace

std::string rooted_canonical_string(const RootedTree& t) {
    auto ch = t.children();
    return rooted_string_rt(ch, 0);
}

}  // namespace tokenslide
