#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/family.hpp"
#include "tokenslide/iso.hpp"
#include "tokenslide/realize.hpp"
#include "tokenslide/search.hpp"
#include "tokenslide/ts.hpp"

using namespace tokenslide;

namespace {

SearchBudget up_to(int n) {
    SearchBudget b;
    b.max_host_vertices = n;
    return b;
}

}  // namespace

TEST_CASE("find_ts_preimage positives") {
    SearchOutcome c4 = find_ts_preimage(generate(cycle_spec(4)), 2, up_to(5));
    REQUIRE(c4.found.has_value());
    CHECK(is_isomorphic(build_ts(*c4.found, 2).skeleton, generate(cycle_spec(4))));
    CHECK(c4.found->n() <= 4);

    SearchOutcome d132 = find_ts_preimage(generate(dumbbell_spec(1, 3, 2)), 2, up_to(6));
    REQUIRE(d132.found.has_value());
    CHECK(d132.found->n() == 6);
    CHECK(is_isomorphic(*d132.found, d132_witness()));  // unique up to labels
}

TEST_CASE("find_ts_preimage negatives") {
    SearchOutcome k13 = find_ts_preimage(generate(star_spec(3)), 2, up_to(7));
    CHECK_FALSE(k13.found.has_value());
    CHECK(k13.exhausted);
    CHECK(k13.candidates_checked > 0);
}

TEST_CASE("oracle agrees with realizers") {
    for (int n = 2; n <= 5; ++n) {
        SearchOutcome r = find_ts_preimage(generate(path_spec(n)), 2, up_to(n + 1));
        CHECK(r.found.has_value());
    }
    SearchOutcome star = find_ts_preimage(generate(star_spec(2)), 2, up_to(4));
    CHECK(star.found.has_value());
}

TEST_CASE("find_ts_tree_containing") {
    // The smallest hosts for K_{1,4} have 8 vertices (the doubled witness
    // host has 6+6-4 = 8); nothing on 7 works.
    SearchOutcome none7 = find_ts_tree_containing(generate(star_spec(4)), 2, up_to(7));
    CHECK_FALSE(none7.found.has_value());
    CHECK(none7.exhausted);
    SearchOutcome k14 = find_ts_tree_containing(generate(star_spec(4)), 2, up_to(8));
    REQUIRE(k14.found.has_value());
    CHECK(k14.found->n() == 8);
    TSGraph ts = build_ts(*k14.found, 2);
    CHECK(structure_queries(ts.skeleton).is_tree);
    CHECK(find_induced(ts.skeleton, generate(star_spec(4))).has_value());

    SearchOutcome k15 = find_ts_tree_containing(generate(star_spec(5)), 2, up_to(6));
    CHECK_FALSE(k15.found.has_value());
    CHECK(k15.exhausted);

    SearchOutcome k1 = find_ts_tree_containing(Graph(1), 2, up_to(2));
    REQUIRE(k1.found.has_value());
    CHECK(k1.found->n() == 2);
    CHECK(k1.found->edge_count() == 0);
}

TEST_CASE("negative_certificate") {
    SearchOutcome a = negative_certificate(NegativeFamily::d1n2, {2}, 2, up_to(6));
    CHECK_FALSE(a.found.has_value());
    CHECK(a.exhausted);

    CHECK_THROWS_AS(negative_certificate(NegativeFamily::d1n2, {3}, 2, up_to(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(negative_certificate(NegativeFamily::dr2s, {1, 1}, 2, up_to(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(negative_certificate(NegativeFamily::k1n, {2}, 2, up_to(5)),
                    std::invalid_argument);

    SearchOutcome s = negative_certificate(NegativeFamily::dr2s, {1, 2}, 2, up_to(6));
    CHECK_FALSE(s.found.has_value());
    CHECK(s.exhausted);
}

TEST_CASE("serial and parallel scans agree") {
    std::vector<Graph> targets = {generate(cycle_spec(4)), generate(dumbbell_spec(1, 3, 2)),
                                  generate(star_spec(3)), generate(path_spec(4))};
    for (const Graph& t : targets) {
        set_scan_mode(ScanMode::serial);
        SearchOutcome serial = find_ts_preimage(t, 2, up_to(6));
        set_scan_mode(ScanMode::parallel);
        SearchOutcome parallel = find_ts_preimage(t, 2, up_to(6));
        set_scan_mode(ScanMode::automatic);
        CHECK(serial.found.has_value() == parallel.found.has_value());
        CHECK(serial.exhausted == parallel.exhausted);
        if (serial.found) CHECK(*serial.found == *parallel.found);  // same least-index witness
    }
}

TEST_CASE("enumeration hard cap and empty target") {
    CHECK_THROWS_AS(enumerate_graphs(10), std::invalid_argument);
    CHECK_THROWS_AS(find_ts_preimage(Graph(0), 2, up_to(3)), std::invalid_argument);
}

TEST_CASE("budget monotonicity") {
    Graph target = generate(cycle_spec(4));
    SearchOutcome small = find_ts_preimage(target, 2, up_to(4));
    SearchOutcome large = find_ts_preimage(target, 2, up_to(6));
    REQUIRE(small.found.has_value());
    REQUIRE(large.found.has_value());
    CHECK(*small.found == *large.found);

    SearchBudget capped = up_to(7);
    capped.max_candidates = 5;
    SearchOutcome few = find_ts_preimage(generate(star_spec(3)), 2, capped);
    CHECK_FALSE(few.found.has_value());
    CHECK_FALSE(few.exhausted);  // budget ran out, not the space
    CHECK(few.candidates_checked <= 5);
}
