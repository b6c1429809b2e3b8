#pragma once

#include <string>

#include "tokenslide/graph.hpp"
#include "tokenslide/ts.hpp"

namespace tokenslide {

// graph6, per the standard format definition (unlabelled).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// {"n": int, "edges": [[u,v],...], "labels": {"0": "a", ...}}
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// {"host": {...}, "k": int, "nodes": [[ids],...], "edges": [[i,j],...]}
std::string ts_to_json(const TSGraph& ts);

// DOT with node labels like "{a,c}".
std::string ts_to_dot(const TSGraph& ts);
std::string to_dot(const Graph& g);

// Sniffs JSON vs graph6 by content.
Graph read_graph_auto(const std::string& text);

}  // namespace tokenslide
