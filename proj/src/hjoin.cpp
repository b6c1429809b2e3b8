#include "tokenslide/hjoin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tokenslide {

namespace {

std::vector<std::string> sorted_labels(const Graph& g, const std::vector<int>& verts) {
    std::vector<std::string> out;
    for (int v : verts) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<JoinContext> h_consistent(const Graph& g1, const Graph& g2, std::string* why) {
    if (!g1.labelled() || !g2.labelled()) throw std::invalid_argument("h_consistent needs labelled graphs");
    std::vector<std::string> shared;
    for (int v = 0; v < g1.n(); ++v)
        if (g2.vertex_of_label(g1.label(v)) != -1) shared.push_back(g1.label(v));
    std::sort(shared.begin(), shared.end());
    for (size_t i = 0; i < shared.size(); ++i) {
        for (size_t j = i + 1; j < shared.size(); ++j) {
            int a1 = g1.vertex_of_label(shared[i]), b1 = g1.vertex_of_label(shared[j]);
            int a2 = g2.vertex_of_label(shared[i]), b2 = g2.vertex_of_label(shared[j]);
            if (g1.has_edge(a1, b1) != g2.has_edge(a2, b2)) {
                if (why)
                    *why = "edge " + shared[i] + "-" + shared[j] + " present in one side only";
                return std::nullopt;
            }
        }
    }
    JoinContext ctx;
    ctx.g1 = g1;
    ctx.g2 = g2;
    ctx.shared = shared;
    std::vector<int> hverts;
    for (const std::string& s : shared) hverts.push_back(g1.vertex_of_label(s));
    ctx.h = induced_subgraph(g1, hverts);
    return ctx;
}

Graph h_join(const JoinContext& ctx) {
    const Graph& g1 = ctx.g1;
    const Graph& g2 = ctx.g2;
    std::set<std::string> shared(ctx.shared.begin(), ctx.shared.end());

    std::vector<std::string> labels = g1.labels();
    std::map<std::string, int> index;
    for (int v = 0; v < g1.n(); ++v) index[g1.label(v)] = v;
    for (int v = 0; v < g2.n(); ++v) {
        if (shared.count(g2.label(v))) continue;
        index[g2.label(v)] = static_cast<int>(labels.size());
        labels.push_back(g2.label(v));
    }
    Graph out(static_cast<int>(labels.size()));
    out.set_labels(labels);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(index[g2.label(u)], index[g2.label(v)]);
    for (int u = 0; u < g1.n(); ++u) {
        if (shared.count(g1.label(u))) continue;
        for (int v = 0; v < g2.n(); ++v) {
            if (shared.count(g2.label(v))) continue;
            out.add_edge(u, index[g2.label(v)]);
        }
    }
    return out;
}

namespace {

// all (k-1)-subsets of the shared vertex ids (per side graph) that are
// independent there, in lexicographic label order
void shared_subsets(const JoinContext& ctx, int size, std::vector<std::vector<std::string>>& out) {
    int m = static_cast<int>(ctx.shared.size());
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(idx.size()) == size) {
            std::vector<std::string> labels;
            for (int i : idx) labels.push_back(ctx.shared[i]);
            out.push_back(labels);
            return;
        }
        for (int i = start; i < m; ++i) {
            bool ok = true;
            int vi = ctx.h.vertex_of_label(ctx.shared[i]);
            for (int j : idx) {
                int vj = ctx.h.vertex_of_label(ctx.shared[j]);
                if (ctx.h.has_edge(vi, vj)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                idx.push_back(i);
                rec(i + 1);
                idx.pop_back();
            }
        }
    };
    rec(0);
}

// private vertices of `side` that extend the (independent) shared label set
// to a size-k independent set of that side
std::vector<std::string> private_extensions(const Graph& side, const std::set<std::string>& shared,
                                            const std::vector<std::string>& core) {
    std::vector<int> core_verts;
    for (const std::string& s : core) core_verts.push_back(side.vertex_of_label(s));
    std::vector<std::string> out;
    for (int v = 0; v < side.n(); ++v) {
        if (shared.count(side.label(v))) continue;
        bool ok = true;
        for (int u : core_verts)
            if (side.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(side.label(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CrossingPair> crossing_pairs(const JoinContext& ctx, int k) {
    if (k < 2) throw std::invalid_argument("crossing_pairs needs k >= 2");
    std::vector<CrossingPair> out;
    std::set<std::string> shared(ctx.shared.begin(), ctx.shared.end());
    std::vector<std::vector<std::string>> cores;
    shared_subsets(ctx, k - 1, cores);
    for (const auto& core : cores) {
        std::vector<std::string> ext1 = private_extensions(ctx.g1, shared, core);
        if (ext1.empty()) continue;
        std::vector<std::string> ext2 = private_extensions(ctx.g2, shared, core);
        for (const std::string& u : ext1) {
            for (const std::string& w : ext2) {
                CrossingPair p;
                p.s1 = core;
                p.s1.push_back(u);
                std::sort(p.s1.begin(), p.s1.end());
                p.s2 = core;
                p.s2.push_back(w);
                std::sort(p.s2.begin(), p.s2.end());
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

bool is_crossing_free(const JoinContext& ctx, int k) { return crossing_pairs(ctx, k).empty(); }

namespace {

using LabelSet = std::vector<std::string>;

LabelSet node_labels(const TSGraph& ts, int i) {
    LabelSet out = ts.node_label_sets(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::pair<LabelSet, LabelSet>> skeleton_edge_set(const TSGraph& ts) {
    std::set<std::pair<LabelSet, LabelSet>> out;
    for (auto [a, b] : ts.skeleton.edges()) {
        LabelSet la = node_labels(ts, a), lb = node_labels(ts, b);
        if (lb < la) std::swap(la, lb);
        out.insert({la, lb});
    }
    return out;
}

}  // namespace

UnionReport verify_union(const JoinContext& ctx, int k) {
    Graph joined = h_join(ctx);
    TSGraph tj = build_ts(joined, k);
    TSGraph t1 = build_ts(ctx.g1, k);
    TSGraph t2 = build_ts(ctx.g2, k);

    auto ej = skeleton_edge_set(tj);
    auto e1 = skeleton_edge_set(t1);
    auto e2 = skeleton_edge_set(t2);
    std::set<std::pair<LabelSet, LabelSet>> eu = e1;
    eu.insert(e2.begin(), e2.end());

    UnionReport rep;
    rep.holds = (ej == eu);
    if (!rep.holds)
        for (const auto& e : ej)
            if (!eu.count(e)) rep.extra_edges.push_back(e);
    return rep;
}

std::vector<std::vector<int>> complement_components(const Graph& g, const std::vector<std::string>& w) {
    if (!g.labelled()) throw std::invalid_argument("h_decompose needs a labelled graph");
    std::set<std::string> ws(w.begin(), w.end());
    for (const std::string& s : w)
        if (g.vertex_of_label(s) == -1) throw std::invalid_argument("cut label not in graph: " + s);
    Graph comp = complement(g);
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!ws.count(g.label(v))) keep.push_back(v);
    Graph rest = induced_subgraph(comp, keep);
    std::vector<std::vector<int>> comps_local = connected_components(rest);
    std::vector<std::vector<int>> out;
    for (auto& c : comps_local) {
        std::vector<int> orig;
        for (int v : c) orig.push_back(keep[v]);
        std::sort(orig.begin(), orig.end());
        out.push_back(orig);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Decomposition h_decompose(const Graph& g, const std::vector<std::string>& w,
                          const std::vector<int>& side1) {
    std::vector<std::vector<int>> comps = complement_components(g, w);
    if (comps.size() < 2)
        throw std::invalid_argument("W is not a cut-set of the complement");
    std::set<int> side1_set(side1.begin(), side1.end());
    for (int idx : side1)
        if (idx < 0 || idx >= static_cast<int>(comps.size()))
            throw std::invalid_argument("side component index out of range");
    if (side1_set.empty() || side1_set.size() == comps.size())
        throw std::invalid_argument("both sides must be nonempty");

    std::vector<int> v1, v2;
    for (const std::string& s : w) v1.push_back(g.vertex_of_label(s));
    v2 = v1;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        auto& target = side1_set.count(i) ? v1 : v2;
        target.insert(target.end(), comps[i].begin(), comps[i].end());
    }
    Decomposition d;
    d.g1 = induced_subgraph(g, v1);
    d.g2 = induced_subgraph(g, v2);
    std::string why;
    auto ctx = h_consistent(d.g1, d.g2, &why);
    if (!ctx) throw std::logic_error("decomposition produced inconsistent halves: " + why);
    d.ctx = *ctx;
    return d;
}

}  // namespace tokenslide
