#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/family.hpp"
#include "tokenslide/iso.hpp"
#include "tokenslide/realize.hpp"
#include "tokenslide/ts.hpp"

using namespace tokenslide;

namespace {

std::vector<TokenSet> naive_independent_sets(const Graph& g, int k) {
    std::vector<TokenSet> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            if (is_independent(g, pick)) out.push_back(pick);
            return;
        }
        for (int v = start; v < g.n(); ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("independent_sets examples") {
    CHECK(independent_sets(generate(path_spec(3)), 2) == std::vector<TokenSet>{{0, 2}});
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= 3; ++k) CHECK(independent_sets(generate(complete_spec(n)), k).empty());
    CHECK(independent_sets(generate(cycle_spec(5)), 2).size() == 5);
}

TEST_CASE("build_ts examples") {
    CHECK(is_isomorphic(build_ts(generate(matching_spec(2, 0)), 2).skeleton, generate(cycle_spec(4))));
    CHECK(is_isomorphic(build_ts(d132_witness(), 2).skeleton, generate(dumbbell_spec(1, 3, 2))));

    TSGraph p4 = build_ts(generate(path_spec(4)), 2);
    CHECK(p4.node_sets == std::vector<TokenSet>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(is_isomorphic(p4.skeleton, generate(path_spec(3))));
    // middle node is {0,3}
    CHECK(p4.skeleton.degree(1) == 2);

    // empty TS-graph is a legal value
    TSGraph none = build_ts(generate(complete_spec(4)), 2);
    CHECK(none.skeleton.n() == 0);
}

TEST_CASE("slide_neighbors") {
    CHECK(slide_neighbors(generate(path_spec(3)), {0, 2}).empty());
    Graph m2 = generate(matching_spec(2, 0));
    CHECK(slide_neighbors(m2, {0, 2}) == std::vector<TokenSet>{{0, 3}, {1, 2}});
    Graph k2k1 = generate(matching_spec(1, 1));
    CHECK(slide_neighbors(k2k1, {0, 2}) == std::vector<TokenSet>{{1, 2}});
    CHECK_THROWS_AS(slide_neighbors(m2, {0, 1}), std::invalid_argument);
}

TEST_CASE("ts_acyclic_bruteforce examples") {
    CHECK_FALSE(ts_acyclic_bruteforce(generate(matching_spec(2, 0)), 2));
    CHECK_FALSE(ts_acyclic_bruteforce(generate(dumbbell_spec(2, 2, 2)), 2));
    for (int s = 1; s <= 5; ++s) CHECK(ts_acyclic_bruteforce(generate(star_spec(s)), 2));
    // the D_{2,2,2} cycle is the C_8 on the listed token sets
    Graph d = generate(dumbbell_spec(2, 2, 2));
    TSGraph ts = build_ts(d, 2);
    auto node = [&](const char* x, const char* y) {
        TokenSet s = {d.vertex_of_label(x), d.vertex_of_label(y)};
        std::sort(s.begin(), s.end());
        int i = ts.index_of(s);
        REQUIRE(i >= 0);
        return i;
    };
    std::vector<int> cyc = {node("u1", "v1"), node("u1", "p2"), node("u1", "v2"), node("p1", "v2"),
                            node("u2", "v2"), node("u2", "p2"), node("u2", "v1"), node("p1", "v1")};
    Graph sub = induced_subgraph(ts.skeleton, cyc);
    CHECK(is_isomorphic(sub, generate(cycle_spec(8))));
}

TEST_CASE("node soundness and edge rule, exhaustive") {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerated_graphs(n)) {
            for (int k = 2; k <= 4; ++k) {
                TSGraph ts = build_ts(g, k);
                CHECK(ts.node_sets == naive_independent_sets(g, k));
                // every edge satisfies the slide rule; every non-edge fails it
                int nn = ts.skeleton.n();
                for (int i = 0; i < nn; ++i) {
                    for (int j = i + 1; j < nn; ++j) {
                        std::vector<int> diff_i, diff_j;
                        std::set_difference(ts.node_sets[i].begin(), ts.node_sets[i].end(),
                                            ts.node_sets[j].begin(), ts.node_sets[j].end(),
                                            std::back_inserter(diff_i));
                        std::set_difference(ts.node_sets[j].begin(), ts.node_sets[j].end(),
                                            ts.node_sets[i].begin(), ts.node_sets[i].end(),
                                            std::back_inserter(diff_j));
                        bool slide = diff_i.size() == 1 && diff_j.size() == 1 &&
                                     g.has_edge(diff_i[0], diff_j[0]);
                        CHECK(ts.skeleton.has_edge(i, j) == slide);
                    }
                }
            }
        }
    }
}

TEST_CASE("isomorphism equivariance") {
    std::mt19937 rng(99);
    for (int n = 4; n <= 7; ++n) {
        const auto& all = enumerated_graphs(n);
        for (size_t gi = 0; gi < all.size(); gi += 7) {
            const Graph& g = all[gi];
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = permuted(g, perm);
            for (int k = 2; k <= 3; ++k)
                CHECK(is_isomorphic(build_ts(g, k).skeleton, build_ts(h, k).skeleton));
        }
    }
}

TEST_CASE("degree equals slide neighbor count") {
    for (int n = 2; n <= 7; ++n) {
        const auto& all = enumerated_graphs(n);
        for (size_t gi = 0; gi < all.size(); gi += 5) {
            const Graph& g = all[gi];
            TSGraph ts = build_ts(g, 2);
            for (int i = 0; i < ts.skeleton.n(); ++i)
                CHECK(ts.skeleton.degree(i) ==
                      static_cast<int>(slide_neighbors(g, ts.node_sets[i]).size()));
        }
    }
}

TEST_CASE("disjoint hosts stay isolated under the slide rule") {
    // in TS_2(G + H), every edge slides within one component
    for (int ng = 2; ng <= 4; ++ng) {
        for (const Graph& g : enumerate_graphs(ng, GraphFilter::connected)) {
            if (g.n() < 2) continue;
            for (int nh = 2; nh <= 3; ++nh) {
                for (const Graph& h : enumerate_graphs(nh, GraphFilter::connected)) {
                    Graph u = disjoint_union(g, h);
                    StructureInfo info = structure_queries(u);
                    TSGraph ts = build_ts(u, 2);
                    for (auto [i, j] : ts.skeleton.edges()) {
                        std::vector<int> di, dj;
                        std::set_difference(ts.node_sets[i].begin(), ts.node_sets[i].end(),
                                            ts.node_sets[j].begin(), ts.node_sets[j].end(),
                                            std::back_inserter(di));
                        std::set_difference(ts.node_sets[j].begin(), ts.node_sets[j].end(),
                                            ts.node_sets[i].begin(), ts.node_sets[i].end(),
                                            std::back_inserter(dj));
                        REQUIRE(di.size() == 1);
                        REQUIRE(dj.size() == 1);
                        CHECK(info.component_of[di[0]] == info.component_of[dj[0]]);
                    }
                }
            }
        }
    }
}

TEST_CASE("count_independent_sets_capped") {
    Graph c5 = generate(cycle_spec(5));
    CHECK(count_independent_sets_capped(c5, 2, 100) == 5);
    CHECK(count_independent_sets_capped(c5, 2, 3) == 4);  // stops just past the cap
}
