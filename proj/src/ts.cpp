#include "tokenslide/ts.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokenslide {

bool is_independent(const Graph& g, const TokenSet& tokens) {
    for (size_t i = 0; i < tokens.size(); ++i)
        for (size_t j = i + 1; j < tokens.size(); ++j)
            if (g.has_edge(tokens[i], tokens[j])) return false;
    return true;
}

std::string token_label(const Graph& host, const TokenSet& tokens) {
    std::string s;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ",";
        s += host.labelled() ? host.label(tokens[i]) : std::to_string(tokens[i]);
    }
    return s;
}

namespace {

void enum_rec(const Graph& g, int k, int start, TokenSet& cur, std::vector<TokenSet>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int v = start; v + need <= g.n(); ++v) {
        bool ok = true;
        for (int u : cur)
            if (g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        enum_rec(g, k, v + 1, cur, out);
        cur.pop_back();
    }
}

long count_rec(const Graph& g, int k, int start, TokenSet& cur, long cap, long count) {
    if (static_cast<int>(cur.size()) == k) return count + 1;
    int need = k - static_cast<int>(cur.size());
    for (int v = start; v + need <= g.n(); ++v) {
        bool ok = true;
        for (int u : cur)
            if (g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        count = count_rec(g, k, v + 1, cur, cap, count);
        cur.pop_back();
        if (count > cap) return count;
    }
    return count;
}

}  // namespace

std::vector<TokenSet> independent_sets(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("independent_sets needs k >= 1");
    std::vector<TokenSet> out;
    TokenSet cur;
    enum_rec(g, k, 0, cur, out);
    return out;
}

long count_independent_sets_capped(const Graph& g, int k, long cap) {
    TokenSet cur;
    return count_rec(g, k, 0, cur, cap, 0);
}

int TSGraph::index_of(const TokenSet& s) const {
    auto it = std::lower_bound(node_sets.begin(), node_sets.end(), s);
    if (it == node_sets.end() || *it != s) return -1;
    return static_cast<int>(it - node_sets.begin());
}

std::vector<std::string> TSGraph::node_label_sets(int i) const {
    std::vector<std::string> out;
    for (int v : node_sets[i])
        out.push_back(host.labelled() ? host.label(v) : std::to_string(v));
    return out;
}

TSGraph build_ts(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("build_ts needs k >= 2");
    TSGraph ts;
    ts.host = g;
    ts.k = k;
    ts.node_sets = independent_sets(g, k);

    Graph skel(static_cast<int>(ts.node_sets.size()));
    // For each set and each token u, try sliding u along each host edge uv;
    // look the result up instead of comparing all pairs.
    for (int i = 0; i < static_cast<int>(ts.node_sets.size()); ++i) {
        const TokenSet& tokens = ts.node_sets[i];
        for (int u : tokens) {
            for (int v : g.neighbors(u)) {
                if (std::binary_search(tokens.begin(), tokens.end(), v)) continue;
                TokenSet moved;
                moved.reserve(tokens.size());
                bool independent = true;
                for (int w : tokens) {
                    if (w == u) continue;
                    if (g.has_edge(w, v)) {
                        independent = false;
                        break;
                    }
                    moved.push_back(w);
                }
                if (!independent) continue;
                moved.insert(std::lower_bound(moved.begin(), moved.end(), v), v);
                int j = ts.index_of(moved);
                if (j > i) skel.add_edge(i, j);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(ts.node_sets.size());
    for (const TokenSet& s : ts.node_sets) labels.push_back(token_label(g, s));
    if (!labels.empty()) skel.set_labels(labels);
    ts.skeleton = std::move(skel);
    return ts;
}

std::vector<TokenSet> slide_neighbors(const Graph& g, const TokenSet& tokens) {
    TokenSet sorted = tokens;
    std::sort(sorted.begin(), sorted.end());
    if (!is_independent(g, sorted)) throw std::invalid_argument("token set is not independent");
    std::vector<TokenSet> out;
    for (int u : sorted) {
        for (int v : g.neighbors(u)) {
            if (std::binary_search(sorted.begin(), sorted.end(), v)) continue;
            TokenSet moved;
            bool independent = true;
            for (int w : sorted) {
                if (w == u) continue;
                if (g.has_edge(w, v)) {
                    independent = false;
                    break;
                }
                moved.push_back(w);
            }
            if (!independent) continue;
            moved.insert(std::lower_bound(moved.begin(), moved.end(), v), v);
            out.push_back(moved);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ts_acyclic_bruteforce(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("ts_acyclic_bruteforce needs k >= 2");
    TSGraph ts = build_ts(g, k);
    return !structure_queries(ts.skeleton).has_cycle;
}

}  // namespace tokenslide
