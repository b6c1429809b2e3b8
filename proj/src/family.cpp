#include "tokenslide/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokenslide {

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (size_t v = 1; v < parent.size(); ++v) ch[parent[v]].push_back(static_cast<int>(v));
    return ch;
}

int RootedTree::max_arity() const {
    int best = 0;
    for (const auto& c : children()) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

int RootedTree::height() const {
    std::vector<int> depth(parent.size(), 0);
    int h = 0;
    for (size_t v = 1; v < parent.size(); ++v) {
        depth[v] = depth[parent[v]] + 1;
        h = std::max(h, depth[v]);
    }
    return h;
}

Graph RootedTree::to_graph() const {
    Graph g(size());
    for (int v = 1; v < size(); ++v) g.add_edge(parent[v], v);
    return g;
}

void RootedTree::validate() const {
    if (parent.empty()) throw std::invalid_argument("empty rooted tree");
    if (parent[0] != -1) throw std::invalid_argument("parent[0] must be -1");
    for (size_t v = 1; v < parent.size(); ++v)
        if (parent[v] < 0 || parent[v] >= static_cast<int>(v))
            throw std::invalid_argument("parent array must satisfy parent[i] < i");
}

RootedTree root_tree_at(const Graph& tree, int root) {
    StructureInfo info = structure_queries(tree);
    if (!info.is_tree) throw std::invalid_argument("input is not a tree");
    int n = tree.n();
    std::vector<int> order, parent_of(n, -1), seen(n, 0);
    order.push_back(root);
    seen[root] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int v : tree.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                parent_of[v] = u;
                order.push_back(v);
            }
        }
    }
    // renumber in BFS order so parent[i] < i
    std::vector<int> newid(n);
    for (int i = 0; i < n; ++i) newid[order[i]] = i;
    RootedTree rt;
    rt.parent.assign(n, -1);
    for (int i = 1; i < n; ++i) rt.parent[i] = newid[parent_of[order[i]]];
    return rt;
}

void FamilySpec::validate() const {
    auto need = [&](size_t k) {
        if (params.size() != k) throw std::invalid_argument("wrong parameter count for family");
    };
    switch (kind) {
        case Kind::path:
            need(1);
            if (params[0] < 0) throw std::invalid_argument("path size must be >= 0");
            break;
        case Kind::cycle:
            need(1);
            if (params[0] < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
            break;
        case Kind::complete:
            need(1);
            if (params[0] < 0) throw std::invalid_argument("complete size must be >= 0");
            break;
        case Kind::complete_bipartite:
            need(2);
            if (params[0] < 0 || params[1] < 0) throw std::invalid_argument("bipartite sizes must be >= 0");
            break;
        case Kind::star:
            need(1);
            if (params[0] < 0) throw std::invalid_argument("star leaf count must be >= 0");
            break;
        case Kind::matching_plus_isolated:
            need(2);
            if (params[0] < 0 || params[1] < 0) throw std::invalid_argument("sizes must be >= 0");
            break;
        case Kind::dumbbell:
            need(3);
            if (params[0] < 1 || params[2] < 1 || params[1] < 1)
                throw std::invalid_argument("dumbbell needs r,s >= 1 and n >= 1");
            break;
        case Kind::kary_tree: {
            need(1);
            if (params[0] < 1) throw std::invalid_argument("arity must be >= 1");
            RootedTree rt{parents};
            rt.validate();
            if (rt.max_arity() > params[0])
                throw std::invalid_argument("parent array exceeds declared arity");
            break;
        }
    }
}

std::string FamilySpec::name() const {
    switch (kind) {
        case Kind::path: return "P" + std::to_string(params[0]);
        case Kind::cycle: return "C" + std::to_string(params[0]);
        case Kind::complete: return "K" + std::to_string(params[0]);
        case Kind::complete_bipartite:
            return "K" + std::to_string(params[0]) + "," + std::to_string(params[1]);
        case Kind::star: return "K1," + std::to_string(params[0]);
        case Kind::matching_plus_isolated:
            return std::to_string(params[0]) + "K2+" + std::to_string(params[1]) + "K1";
        case Kind::dumbbell:
            return "D" + std::to_string(params[0]) + "," + std::to_string(params[1]) + "," +
                   std::to_string(params[2]);
        case Kind::kary_tree: return std::to_string(params[0]) + "-ary tree";
    }
    return "?";
}

Graph generate(const FamilySpec& spec) {
    spec.validate();
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::path: {
            int n = spec.params[0];
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case K::cycle: {
            int n = spec.params[0];
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case K::complete: {
            int n = spec.params[0];
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case K::complete_bipartite: {
            int m = spec.params[0], n = spec.params[1];
            Graph g(m + n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
            return g;
        }
        case K::star: {
            int n = spec.params[0];
            Graph g(n + 1);
            for (int i = 1; i <= n; ++i) g.add_edge(0, i);
            return g;
        }
        case K::matching_plus_isolated: {
            int m = spec.params[0], iso = spec.params[1];
            Graph g(2 * m + iso);
            for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
            return g;
        }
        case K::dumbbell: {
            int r = spec.params[0], n = spec.params[1], s = spec.params[2];
            Graph g(r + n + s);
            std::vector<std::string> labels;
            for (int i = 1; i <= r; ++i) labels.push_back("u" + std::to_string(i));
            for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
            for (int i = 1; i <= s; ++i) labels.push_back("v" + std::to_string(i));
            int p1 = r, pn = r + n - 1;
            for (int i = 0; i < r; ++i) g.add_edge(i, p1);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(r + i, r + i + 1);
            for (int i = 0; i < s; ++i) g.add_edge(pn, r + n + i);
            g.set_labels(labels);
            return g;
        }
        case K::kary_tree: {
            RootedTree rt{spec.parents};
            return rt.to_graph();
        }
    }
    throw std::logic_error("unreachable");
}

FamilySpec path_spec(int n) { return {FamilySpec::Kind::path, {n}, {}}; }
FamilySpec cycle_spec(int n) { return {FamilySpec::Kind::cycle, {n}, {}}; }
FamilySpec complete_spec(int n) { return {FamilySpec::Kind::complete, {n}, {}}; }
FamilySpec complete_bipartite_spec(int m, int n) {
    return {FamilySpec::Kind::complete_bipartite, {m, n}, {}};
}
FamilySpec star_spec(int n) { return {FamilySpec::Kind::star, {n}, {}}; }
FamilySpec matching_spec(int m, int n_isolated) {
    return {FamilySpec::Kind::matching_plus_isolated, {m, n_isolated}, {}};
}
FamilySpec dumbbell_spec(int r, int n, int s) { return {FamilySpec::Kind::dumbbell, {r, n, s}, {}}; }
FamilySpec kary_tree_spec(int arity, std::vector<int> parents) {
    return {FamilySpec::Kind::kary_tree, {arity}, std::move(parents)};
}

}  // namespace tokenslide
