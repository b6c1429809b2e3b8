#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tokenslide/enumerate.hpp"
#include "tokenslide/family.hpp"
#include "tokenslide/forbidden.hpp"
#include "tokenslide/graph_io.hpp"
#include "tokenslide/hjoin.hpp"
#include "tokenslide/iso.hpp"
#include "tokenslide/realize.hpp"
#include "tokenslide/search.hpp"
#include "tokenslide/ts.hpp"

using namespace tokenslide;
using nlohmann::json;

namespace {

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_graph_auto(ss.str());
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text << "\n";
}

std::vector<int> parse_params(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

FamilySpec family_by_name(const std::string& name, const std::vector<int>& p) {
    auto need = [&](size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family " + name + " wants " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "path") {
        need(1);
        return path_spec(p[0]);
    }
    if (name == "cycle") {
        need(1);
        return cycle_spec(p[0]);
    }
    if (name == "complete") {
        need(1);
        return complete_spec(p[0]);
    }
    if (name == "complete_bipartite") {
        need(2);
        return complete_bipartite_spec(p[0], p[1]);
    }
    if (name == "star") {
        need(1);
        return star_spec(p[0]);
    }
    if (name == "matching") {
        need(2);
        return matching_spec(p[0], p[1]);
    }
    if (name == "dumbbell") {
        need(3);
        return dumbbell_spec(p[0], p[1], p[2]);
    }
    throw std::invalid_argument("unknown family: " + name);
}

RootedTree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        json j = json::parse(text);
        if (j.contains("parents")) {
            RootedTree rt;
            for (const auto& v : j["parents"]) rt.parent.push_back(v.get<int>());
            rt.validate();
            return rt;
        }
    }
    return root_tree_at(read_graph_auto(text), 0);
}

json verdict_json(const AcyclicityVerdict& v) {
    json j;
    j["acyclic"] = v.acyclic;
    if (!v.acyclic) {
        j["pattern"] = v.pattern_name;
        j["witness"] = v.witness->map;
    }
    if (v.classification) {
        switch (*v.classification) {
            case TreeClass::star: j["class"] = "K_{1,s}"; break;
            case TreeClass::d1ns: j["class"] = "D_{1,n,s}"; break;
            case TreeClass::drns: j["class"] = "D_{r,n,s}"; break;
        }
        j["family"] = v.family->name();
    }
    return j;
}

json outcome_json(const SearchOutcome& o) {
    json j;
    j["exhausted"] = o.exhausted;
    j["candidates_checked"] = o.candidates_checked;
    j["bound"] = {{"max_host_vertices", o.bound_used.max_host_vertices}};
    if (o.bound_used.max_seconds) j["bound"]["max_seconds"] = *o.bound_used.max_seconds;
    if (o.bound_used.max_candidates) j["bound"]["max_candidates"] = *o.bound_used.max_candidates;
    if (o.found)
        j["found"] = json::parse(to_json(*o.found));
    else
        j["found"] = nullptr;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"token sliding reconfiguration graphs of independent sets"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    std::string gen_family, gen_params, gen_out;
    bool gen_g6 = false;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--params", gen_params, "comma separated parameters")->required();
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_flag("--g6", gen_g6, "emit graph6 instead of JSON");

    auto* ts_cmd = app.add_subcommand("ts", "build the token sliding graph");
    std::string ts_input, ts_dot, ts_json_path;
    int ts_k = 2;
    ts_cmd->add_option("--k", ts_k, "token count")->required();
    ts_cmd->add_option("--input", ts_input, "host graph (json or graph6)")->required();
    ts_cmd->add_option("--dot", ts_dot, "write DOT here");
    ts_cmd->add_option("--json", ts_json_path, "write JSON here (default stdout)");

    auto* check = app.add_subcommand("check", "acyclicity characterization for trees/forests");
    std::string check_input;
    int check_k = 2;
    bool check_forest = false;
    check->add_option("--k", check_k, "token count (2 or 3)")->required();
    check->add_option("--input", check_input, "tree/forest graph")->required();
    check->add_flag("--forest", check_forest, "treat input as a forest");

    auto* join = app.add_subcommand("join", "H-join of two labelled graphs");
    std::string join_a, join_b, join_out;
    int join_k = 2;
    bool join_verify = false;
    join->add_option("--g1", join_a)->required();
    join->add_option("--g2", join_b)->required();
    join->add_option("--k", join_k)->required();
    join->add_option("--out", join_out, "output path (default stdout)");
    join->add_flag("--verify", join_verify, "verify the union law");

    auto* realize = app.add_subcommand("realize", "construct a host for a target");
    std::string r_target, r_params, r_tree, r_out;
    int r_k = 2;
    realize->add_option("--target", r_target, "path|star|kary|tree-embed|k1n|dr2s|d132")->required();
    realize->add_option("--k", r_k, "token count");
    realize->add_option("--params", r_params, "target parameters");
    realize->add_option("--tree", r_tree, "tree input for kary/tree-embed");
    realize->add_option("--out", r_out, "output path (default stdout)");

    auto* search = app.add_subcommand("search", "bounded exhaustive host search");
    std::string s_target;
    int s_k = 2, s_max_n = 6;
    double s_timeout = 0;
    bool s_contains = false;
    search->add_option("--target", s_target)->required();
    search->add_option("--k", s_k)->required();
    search->add_option("--max-n", s_max_n)->required();
    search->add_flag("--contains", s_contains, "search for a TS tree containing the target");
    search->add_option("--timeout", s_timeout, "wall clock budget in seconds");

    auto* conj = app.add_subcommand("conjecture", "scan forests for a conjecture counterexample");
    int c_k = 4, c_max_n = 6;
    long c_budget = -1;
    conj->add_option("--k", c_k)->required();
    conj->add_option("--max-n", c_max_n)->required();
    conj->add_option("--max-candidates", c_budget);

    auto* fix = app.add_subcommand("fixtures", "dump the cyclic-TS_2 fixture catalogue");
    std::string fix_out;
    fix->add_option("--out", fix_out, "output path (default stdout)");

    app.parse(argc, argv);

    if (const char* env = std::getenv("TOKENSLIDE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }

    if (gen->parsed()) {
        Graph g = generate(family_by_name(gen_family, parse_params(gen_params)));
        write_output(gen_g6 ? to_graph6(g) : to_json(g), gen_out);
        return 0;
    }
    if (ts_cmd->parsed()) {
        Graph g = read_graph_file(ts_input);
        TSGraph ts = build_ts(g, ts_k);
        if (!ts_dot.empty()) write_output(ts_to_dot(ts), ts_dot);
        if (ts_dot.empty() || !ts_json_path.empty()) write_output(ts_to_json(ts), ts_json_path);
        return 0;
    }
    if (check->parsed()) {
        Graph g = read_graph_file(check_input);
        AcyclicityVerdict v;
        if (check_k == 2)
            v = check_forest ? check_forest_k2(g) : check_tree_k2(g);
        else if (check_k == 3)
            v = check_forest ? check_forest_k3(g) : check_tree_k3(g);
        else
            throw std::invalid_argument("check supports k = 2 or 3");
        json j = verdict_json(v);
        j["k"] = check_k;
        j["brute_force_agrees"] = (ts_acyclic_bruteforce(g, check_k) == v.acyclic);
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (join->parsed()) {
        Graph g1 = read_graph_file(join_a);
        Graph g2 = read_graph_file(join_b);
        std::string why;
        auto ctx = h_consistent(g1, g2, &why);
        if (!ctx) throw std::invalid_argument("inputs are not H-consistent: " + why);
        Graph joined = h_join(*ctx);
        json j;
        j["join"] = json::parse(to_json(joined));
        j["shared"] = ctx->shared;
        j["crossing_free"] = is_crossing_free(*ctx, join_k);
        if (join_verify) {
            UnionReport rep = verify_union(*ctx, join_k);
            j["union_holds"] = rep.holds;
            json extra = json::array();
            for (const auto& [x, y] : rep.extra_edges) extra.push_back({x, y});
            j["extra_edges"] = extra;
        }
        write_output(j.dump(), join_out);
        return 0;
    }
    if (realize->parsed()) {
        Graph host;
        Graph target;
        bool contains_mode = false;
        int ts_tokens = r_k;
        std::vector<int> p = r_params.empty() ? std::vector<int>{} : parse_params(r_params);
        if (r_target == "path") {
            if (p.size() != 1) throw std::invalid_argument("path wants --params n");
            host = realize_path(r_k, p[0]);
            target = generate(path_spec(p[0]));
        } else if (r_target == "star") {
            if (p.size() != 1) throw std::invalid_argument("star wants --params d");
            host = realize_star(r_k, p[0]);
            target = generate(star_spec(p[0]));
        } else if (r_target == "kary") {
            RootedTree rt = read_tree_file(r_tree);
            host = realize_kary_tree(rt, r_k).host;
            target = rt.to_graph();
            ts_tokens = r_k + 1;
        } else if (r_target == "tree-embed") {
            RootedTree rt = read_tree_file(r_tree);
            target = rt.to_graph();
            host = embed_3ary_in_ts2_tree(target);
            contains_mode = true;
            ts_tokens = 2;
        } else if (r_target == "k1n") {
            if (p.size() != 1) throw std::invalid_argument("k1n wants --params n");
            host = realize_k1n_in_tsk_tree(r_k, p[0]);
            target = generate(star_spec(p[0]));
            contains_mode = p[0] > r_k;
        } else if (r_target == "dr2s") {
            if (p.size() != 2) throw std::invalid_argument("dr2s wants --params r,s");
            host = realize_dr2s(r_k, p[0], p[1]);
            target = generate(dumbbell_spec(p[0], 2, p[1]));
        } else if (r_target == "d132") {
            host = d132_witness();
            target = generate(dumbbell_spec(1, 3, 2));
            ts_tokens = 2;
        } else {
            throw std::invalid_argument("unknown realize target: " + r_target);
        }
        TSGraph ts = build_ts(host, ts_tokens);
        json j;
        j["host"] = json::parse(to_json(host));
        j["k"] = ts_tokens;
        j["ts_nodes"] = ts.skeleton.n();
        bool ok;
        if (contains_mode)
            ok = structure_queries(ts.skeleton).is_tree &&
                 find_induced(ts.skeleton, target).has_value();
        else
            ok = is_isomorphic(ts.skeleton, target);
        j["verified"] = ok;
        write_output(j.dump(), r_out);
        return ok ? 0 : 1;
    }
    if (search->parsed()) {
        Graph target = read_graph_file(s_target);
        SearchBudget budget;
        budget.max_host_vertices = s_max_n;
        if (s_timeout > 0) budget.max_seconds = s_timeout;
        SearchOutcome o = s_contains ? find_ts_tree_containing(target, s_k, budget)
                                     : find_ts_preimage(target, s_k, budget);
        std::cout << outcome_json(o).dump() << "\n";
        return 0;
    }
    if (conj->parsed()) {
        ConjectureReport rep = conjecture_scan(c_k, c_max_n, c_budget);
        json j;
        j["forests_checked"] = rep.forests_checked;
        j["budget_exhausted"] = rep.budget_exhausted;
        if (rep.counterexample)
            j["counterexample"] = json::parse(to_json(*rep.counterexample));
        else
            j["counterexample"] = nullptr;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (fix->parsed()) {
        json j = json::array();
        for (const auto& [g, name] : figure2_fixtures()) {
            json entry;
            entry["name"] = name;
            entry["graph"] = json::parse(to_json(g));
            entry["graph6"] = to_graph6(g);
            entry["ts2_cyclic"] = !ts_acyclic_bruteforce(g, 2);
            j.push_back(entry);
        }
        write_output(j.dump(), fix_out);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
