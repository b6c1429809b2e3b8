#include "tokenslide/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tokenslide/family.hpp"

namespace tokenslide {

namespace {

// Iterated neighborhood refinement on the disjoint union of two graphs, so
// the resulting colors are comparable across them. Returns the color vectors
// for each side. Used only to prune the backtracker, never as a decision.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const Graph& a, const Graph& b) {
    Graph u = disjoint_union(a, b);
    int n = u.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = u.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : u.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            auto key = std::make_pair(color[v], std::move(nb));
            auto it = ids.find(key);
            if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        if (next == color) break;
        bool finer = false;
        for (int v = 0; v < n && !finer; ++v)
            for (int w = v + 1; w < n; ++w)
                if (color[v] == color[w] && next[v] != next[w]) {
                    finer = true;
                    break;
                }
        color = std::move(next);
        if (!finer) break;
    }
    std::vector<int> ca(color.begin(), color.begin() + a.n());
    std::vector<int> cb(color.begin() + a.n(), color.end());
    return {ca, cb};
}

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    bool exact;  // isomorphism mode: bijective, degree equality, color match
    std::vector<int> host_color, pat_color;
    std::vector<int> map;    // pattern -> host
    std::vector<char> used;  // host vertex used
    const std::function<bool(const Embedding&)>* cb = nullptr;
    bool stopped = false;

    Matcher(const Graph& h, const Graph& p, bool ex) : host(h), pattern(p), exact(ex) {
        map.assign(p.n(), -1);
        used.assign(h.n(), 0);
    }

    bool feasible(int pv, int hv) const {
        if (used[hv]) return false;
        if (exact) {
            if (host_color[hv] != pat_color[pv]) return false;
        } else if (host.degree(hv) < pattern.degree(pv)) {
            return false;
        }
        for (int q = 0; q < pv; ++q)
            if (pattern.has_edge(pv, q) != host.has_edge(hv, map[q])) return false;
        return true;
    }

    bool search(int pv) {
        if (stopped) return true;
        if (pv == pattern.n()) {
            Embedding emb{map};
            if (!(*cb)(emb)) stopped = true;
            return stopped;
        }
        for (int hv = 0; hv < host.n(); ++hv) {
            if (!feasible(pv, hv)) continue;
            map[pv] = hv;
            used[hv] = 1;
            if (search(pv + 1)) return true;
            used[hv] = 0;
            map[pv] = -1;
        }
        return false;
    }
};

}  // namespace

bool for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const Embedding&)>& fn) {
    if (pattern.n() > host.n()) return false;
    if (pattern.n() == 0) {
        Embedding e;
        return !fn(e);
    }
    Matcher m(host, pattern, false);
    m.cb = &fn;
    m.search(0);
    return m.stopped;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    std::optional<Embedding> out;
    for_each_induced(host, pattern, [&](const Embedding& e) {
        out = e;
        return false;
    });
    return out;
}

std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.n() == 0) return Embedding{};
    auto [cg, ch] = joint_colors(g, h);
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::optional<Embedding> out;
    Matcher m(h, g, true);
    m.pat_color = cg;
    m.host_color = ch;
    std::function<bool(const Embedding&)> fn = [&](const Embedding& e) {
        out = e;
        return false;
    };
    m.cb = &fn;
    m.search(0);
    return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

uint64_t automorphism_count(const Graph& g) {
    if (g.n() == 0) return 1;
    uint64_t count = 0;
    auto [cg, ch] = joint_colors(g, g);
    Matcher m(g, g, true);
    m.pat_color = cg;
    m.host_color = ch;
    std::function<bool(const Embedding&)> fn = [&](const Embedding&) {
        ++count;
        return true;
    };
    m.cb = &fn;
    m.search(0);
    return count;
}

namespace {

// Exact "independent set of size >= m" on the vertices in `allowed`;
// callers leave at most a dozen vertices here.
bool mis_at_least(const Graph& g, std::vector<int>& allowed, int m, std::vector<int>& picked) {
    if (m <= 0) return true;
    if (static_cast<int>(allowed.size()) < m) return false;
    int v = allowed.back();
    std::vector<int> rest(allowed.begin(), allowed.end() - 1);
    std::vector<int> compatible;
    for (int u : rest)
        if (!g.has_edge(u, v)) compatible.push_back(u);
    picked.push_back(v);
    if (mis_at_least(g, compatible, m - 1, picked)) return true;
    picked.pop_back();
    return mis_at_least(g, rest, m, picked);
}

}  // namespace

std::optional<Embedding> find_induced_plus_isolated(const Graph& host, const Graph& pattern, int m) {
    if (m < 0) throw std::invalid_argument("negative isolated count");
    std::optional<Embedding> out;
    for_each_induced(host, pattern, [&](const Embedding& e) {
        std::vector<char> blocked(host.n(), 0);
        for (int hv : e.map) {
            blocked[hv] = 1;
            for (int u : host.neighbors(hv)) blocked[u] = 1;
        }
        std::vector<int> allowed;
        for (int v = host.n() - 1; v >= 0; --v)
            if (!blocked[v]) allowed.push_back(v);  // descending so back() is least
        std::vector<int> picked;
        if (mis_at_least(host, allowed, m, picked)) {
            Embedding full = e;
            std::sort(picked.begin(), picked.end());
            for (int v : picked) full.map.push_back(v);
            out = full;
            return false;
        }
        return true;
    });
    return out;
}

bool has_induced_cycle(const Graph& g, int length) {
    return find_induced(g, generate(cycle_spec(length))).has_value();
}

}  // namespace tokenslide
