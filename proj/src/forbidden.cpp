#include "tokenslide/forbidden.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/ts.hpp"

namespace tokenslide {

DbPrediction lemma_db_predict(const DbParams& p) {
    DbPrediction out;
    switch (p.variant) {
        case DbParams::Variant::a:
            if (p.k < 2) throw std::invalid_argument("variant (a) needs k >= 2");
            if (p.n < 0) throw std::invalid_argument("variant (a) needs n >= 0");
            out.cyclic = (p.n >= p.k - 2);
            out.cycle_kind = out.cyclic ? CycleKind::c4 : CycleKind::none;
            return out;
        case DbParams::Variant::b:
            if (p.k != 2 && p.k != 3) throw std::invalid_argument("variant (b) is stated for k in {2,3}");
            if (p.n < 1 || p.s < 1) throw std::invalid_argument("variant (b) needs n,s >= 1");
            out.cyclic = (p.n >= 2 * p.k - 1);
            out.cycle_kind = out.cyclic ? CycleKind::c4 : CycleKind::none;
            return out;
        case DbParams::Variant::c:
            if (p.k != 2 && p.k != 3) throw std::invalid_argument("variant (c) is stated for k in {2,3}");
            if (p.r < 2 || p.s < 2 || p.n < 1) throw std::invalid_argument("variant (c) needs r,s >= 2, n >= 1");
            out.cyclic = (p.n >= 2 * p.k - 2);
            out.cycle_kind = out.cyclic ? CycleKind::c8 : CycleKind::none;
            return out;
    }
    throw std::logic_error("unreachable");
}

namespace {

// Detect whether t is D_{r,n,s} (path core with leaves at both ends) or a
// star; returns normalized r <= s.
struct DumbbellShape {
    bool is_star = false;
    int star_leaves = 0;
    bool is_dumbbell = false;
    int r = 0, n = 0, s = 0;
};

DumbbellShape classify_shape(const Graph& t) {
    DumbbellShape out;
    int n = t.n();
    if (n == 1) {
        out.is_star = true;
        out.star_leaves = 0;
        return out;
    }
    std::vector<int> internal;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) >= 2) internal.push_back(v);
    if (internal.empty()) {  // K_2
        out.is_star = true;
        out.star_leaves = 1;
        return out;
    }
    if (internal.size() == 1) {
        out.is_star = true;
        out.star_leaves = t.degree(internal[0]);
        return out;
    }
    // internal vertices must induce a path, and all leaves must attach to
    // its two endpoints
    Graph core = induced_subgraph(t, internal);
    StructureInfo ci = structure_queries(core);
    if (!ci.is_tree) return out;
    int ends = 0;
    std::vector<int> endpoints;
    for (int v = 0; v < core.n(); ++v) {
        if (core.degree(v) > 2) return out;
        if (core.degree(v) == 1) {
            ++ends;
            endpoints.push_back(internal[v]);
        }
    }
    if (ends != 2) return out;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) != 1) continue;
        int nb = t.neighbors(v)[0];
        if (nb != endpoints[0] && nb != endpoints[1]) return out;
    }
    int leaves0 = 0, leaves1 = 0;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) != 1) continue;
        (t.neighbors(v)[0] == endpoints[0] ? leaves0 : leaves1)++;
    }
    if (leaves0 == 0 || leaves1 == 0) return out;  // cannot happen in a tree core
    out.is_dumbbell = true;
    out.r = std::min(leaves0, leaves1);
    out.s = std::max(leaves0, leaves1);
    out.n = static_cast<int>(internal.size());
    return out;
}

AcyclicityVerdict check_against(const Graph& g,
                                const std::vector<std::pair<Graph, std::string>>& patterns) {
    AcyclicityVerdict v;
    for (const auto& [pat, name] : patterns) {
        auto emb = find_induced(g, pat);
        if (emb) {
            v.acyclic = false;
            v.witness = emb;
            v.pattern_name = name;
            return v;
        }
    }
    v.acyclic = true;
    return v;
}

// base pattern + m isolated vertices, searched without materializing the
// padded pattern as a subset scan
bool padded_hit(const Graph& g, const Graph& base, int m, const std::string& name,
                AcyclicityVerdict& v) {
    auto emb = find_induced_plus_isolated(g, base, m);
    if (emb) {
        v.acyclic = false;
        v.witness = emb;
        v.pattern_name = name;
        return true;
    }
    return false;
}

const Graph& pat_2k2() {
    static Graph g = generate(matching_spec(2, 0));
    return g;
}
const Graph& pat_d222() {
    static Graph g = generate(dumbbell_spec(2, 2, 2));
    return g;
}
const Graph& pat_d242() {
    static Graph g = generate(dumbbell_spec(2, 4, 2));
    return g;
}

}  // namespace

AcyclicityVerdict check_tree_k2(const Graph& t) {
    if (!structure_queries(t).is_tree) throw std::invalid_argument("check_tree_k2 needs a tree");
    AcyclicityVerdict v = check_against(t, {{pat_2k2(), "2K2"}, {pat_d222(), "D2,2,2"}});
    if (!v.acyclic) return v;
    DumbbellShape shape = classify_shape(t);
    if (shape.is_star) {
        v.classification = TreeClass::star;
        v.family = star_spec(shape.star_leaves);
    } else if (shape.is_dumbbell) {
        v.classification = TreeClass::d1ns;
        v.family = dumbbell_spec(shape.r, shape.n, shape.s);
    }
    return v;
}

AcyclicityVerdict check_forest_k2(const Graph& f) {
    if (!structure_queries(f).is_forest) throw std::invalid_argument("check_forest_k2 needs a forest");
    return check_against(f, {{pat_2k2(), "2K2"}, {pat_d222(), "D2,2,2"}});
}

AcyclicityVerdict check_tree_k3(const Graph& t) {
    if (!structure_queries(t).is_tree) throw std::invalid_argument("check_tree_k3 needs a tree");
    AcyclicityVerdict v;
    if (padded_hit(t, pat_2k2(), 1, "2K2+K1", v)) return v;
    v = check_against(t, {{pat_d242(), "D2,4,2"}});
    if (!v.acyclic) return v;
    DumbbellShape shape = classify_shape(t);
    if (shape.is_star) {
        v.classification = TreeClass::star;
        v.family = star_spec(shape.star_leaves);
    } else if (shape.is_dumbbell) {
        v.classification = shape.r == 1 ? TreeClass::d1ns : TreeClass::drns;
        v.family = dumbbell_spec(shape.r, shape.n, shape.s);
    }
    return v;
}

AcyclicityVerdict check_forest_k3(const Graph& f) {
    if (!structure_queries(f).is_forest) throw std::invalid_argument("check_forest_k3 needs a forest");
    AcyclicityVerdict v;
    if (padded_hit(f, pat_2k2(), 1, "2K2+K1", v)) return v;
    if (padded_hit(f, pat_d222(), 1, "D2,2,2+K1", v)) return v;
    if (padded_hit(f, pat_d242(), 0, "D2,4,2", v)) return v;
    v.acyclic = true;
    return v;
}

K4Verdict k4_cycle_sufficient(const Graph& f, int k) {
    if (k < 4) throw std::invalid_argument("k4_cycle_sufficient needs k >= 4");
    if (!structure_queries(f).is_forest) throw std::invalid_argument("k4_cycle_sufficient needs a forest");
    K4Verdict out;
    struct Probe {
        const Graph& base;
        int pad;
        std::string name;
    };
    std::vector<Probe> probes = {
        {pat_2k2(), k - 2, "2K2+" + std::to_string(k - 2) + "K1"},
        {pat_d222(), k - 2, "D2,2,2+" + std::to_string(k - 2) + "K1"},
        {pat_d242(), k - 3, "D2,4,2+" + std::to_string(k - 3) + "K1"},
    };
    for (const auto& probe : probes) {
        auto emb = find_induced_plus_isolated(f, probe.base, probe.pad);
        if (emb) {
            out.forces_cycle = true;
            out.witness = emb;
            out.pattern_name = probe.name;
            return out;
        }
    }
    return out;
}

ConjectureReport conjecture_scan(int k, int max_vertices, long max_candidates) {
    if (k < 4) throw std::invalid_argument("conjecture_scan needs k >= 4");
    ConjectureReport rep;
    std::vector<Graph> forests;
    for (int n = 1; n <= max_vertices; ++n) {
        auto batch = enumerate_forests(n);
        forests.insert(forests.end(), batch.begin(), batch.end());
    }
    long limit = max_candidates < 0 ? static_cast<long>(forests.size())
                                    : std::min<long>(max_candidates, forests.size());
    rep.budget_exhausted = limit < static_cast<long>(forests.size());
    long best = -1;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < limit; ++i) {
        const Graph& f = forests[i];
        bool pattern = k4_cycle_sufficient(f, k).forces_cycle;
        // counterexample to the conjecture's contrapositive: TS_k acyclic
        // yet a forbidden pattern present
        if (pattern && ts_acyclic_bruteforce(f, k)) {
#pragma omp critical
            {
                if (best == -1 || i < best) best = i;
            }
        }
    }
    rep.forests_checked = limit;
    if (best >= 0) rep.counterexample = forests[best];
    return rep;
}

std::vector<std::pair<Graph, std::string>> figure2_fixtures() {
    std::vector<std::pair<Graph, std::string>> out;
    auto add = [&](int n, std::vector<std::pair<int, int>> edges, const std::string& name) {
        out.emplace_back(make_graph(n, edges), name);
    };
    // The minimal graphs on 4..7 vertices whose TS_2 has a cycle, complements
    // of cycles excluded. The list is validated against a fresh minimality
    // sweep in the tests.
    add(4, {{0, 2}, {1, 3}}, "2K2");
    add(4, {{0, 2}, {2, 3}, {3, 0}}, "K3+K1");
    add(5, {{0, 3}, {3, 1}, {1, 4}, {4, 0}}, "C4+K1");
    add(6, {{4, 0}, {4, 1}, {4, 5}, {5, 2}, {5, 3}}, "D2,2,2");
    add(6, {{0, 5}, {5, 4}, {4, 0}, {0, 3}, {5, 2}, {4, 1}}, "net");
    add(6, {{1, 5}, {5, 3}, {3, 0}, {0, 4}, {4, 2}, {4, 5}, {2, 5}, {1, 4}}, "6v-8e");
    add(6, {{0, 3}, {3, 1}, {1, 5}, {5, 2}, {2, 4}, {4, 0}, {3, 4}, {4, 5}, {5, 3}}, "6v-9e");
    add(7, {{0, 5}, {5, 1}, {1, 6}, {6, 4}, {4, 0}, {2, 5}, {5, 6}, {6, 3}}, "7v-8e");
    add(7, {{5, 1}, {1, 4}, {4, 0}, {0, 3}, {3, 6}, {6, 2}, {2, 5}, {0, 5}, {0, 6}, {1, 6}}, "7v-10e");
    add(7, {{0, 3}, {3, 5}, {5, 2}, {2, 6}, {6, 1}, {1, 4}, {4, 0}, {0, 5}, {1, 5}, {3, 6}, {5, 6}, {4, 6}},
        "7v-12e");
    return out;
}

}  // namespace tokenslide
