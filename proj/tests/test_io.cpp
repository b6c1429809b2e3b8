#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/family.hpp"
#include "tokenslide/graph_io.hpp"
#include "tokenslide/realize.hpp"
#include "tokenslide/ts.hpp"

using namespace tokenslide;

namespace {

// second, independent graph6 decoder (bit-stream based)
Graph decode_g6_reference(const std::string& s) {
    std::vector<int> bits;
    size_t pos = 0;
    int n;
    if (s[0] == '~') {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    for (; pos < s.size(); ++pos) {
        int v = s[pos] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    Graph g(n);
    int at = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[at++]) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(generate(complete_spec(2))) == "A_");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(generate(complete_spec(3))) == "Bw");
    CHECK(to_graph6(generate(complete_spec(4))) == "C~");
    CHECK(from_graph6("A_") == generate(complete_spec(2)));
    CHECK(from_graph6("Bw") == generate(complete_spec(3)));
}

TEST_CASE("graph6 round trip and cross-decoder") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            std::string s = to_graph6(g);
            CHECK(from_graph6(s) == g);
            if (n > 0) CHECK(decode_g6_reference(s) == g);
        }
    }
    // a larger one
    Graph big = generate(cycle_spec(40));
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("json round trip") {
    Graph g = generate(dumbbell_spec(1, 3, 2));
    Graph back = graph_from_json(to_json(g));
    CHECK(back == g);
    Graph unlabelled = generate(cycle_spec(5));
    CHECK(graph_from_json(to_json(unlabelled)) == unlabelled);
    CHECK_THROWS(graph_from_json("{\"edges\": []}"));
}

TEST_CASE("auto reader") {
    Graph g = generate(path_spec(4));
    CHECK(read_graph_auto(to_json(g)) == g);
    CHECK(read_graph_auto(to_graph6(g) + "\n") == g);
    CHECK(read_graph_auto("  " + to_json(g)) == g);
}

TEST_CASE("dot output") {
    TSGraph ts = build_ts(d132_witness(), 2);
    std::string dot = ts_to_dot(ts);
    // node count equals the skeleton's
    size_t count = 0, pos = 0;
    while ((pos = dot.find("label=", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(static_cast<int>(count) == ts.skeleton.n());
    CHECK(dot.find("graph ts {") == 0);
    CHECK(dot.back() == '\n');
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("ts json") {
    TSGraph ts = build_ts(generate(matching_spec(2, 0)), 2);
    std::string j = ts_to_json(ts);
    CHECK(j.find("\"k\":2") != std::string::npos);
    CHECK(j.find("\"nodes\"") != std::string::npos);
}
