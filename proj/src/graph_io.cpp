#include "tokenslide/graph_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace tokenslide {

namespace {

void append_bits(std::string& out, uint64_t value, int bits, int& fill, int& acc) {
    for (int b = bits - 1; b >= 0; --b) {
        acc = (acc << 1) | static_cast<int>((value >> b) & 1);
        if (++fill == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            fill = 0;
        }
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for this graph6 writer");
    }
    int fill = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) append_bits(out, g.has_edge(i, j) ? 1 : 0, 1, fill, acc);
    if (fill > 0) {
        acc <<= (6 - fill);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 character");
        return c - 63;
    };
    int n;
    if (!s.empty() && s[0] == 126) {
        ++pos;
        if (pos < s.size() && s[pos] == 126) throw std::invalid_argument("graph6 size beyond supported range");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    Graph g(n);
    int have = 0, acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                acc = next();
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
            --have;
        }
    }
    return g;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.labelled()) {
        nlohmann::json labels = nlohmann::json::object();
        for (int v = 0; v < g.n(); ++v) labels[std::to_string(v)] = g.label(v);
        j["labels"] = labels;
    }
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n")) throw std::invalid_argument("graph json needs field 'n'");
    int n = j["n"].get<int>();
    Graph g(n);
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    if (j.contains("labels") && !j["labels"].empty()) {
        std::vector<std::string> labels(n);
        std::vector<char> seen(n, 0);
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it) {
            int v = std::stoi(it.key());
            if (v < 0 || v >= n) throw std::invalid_argument("label key out of range");
            labels[v] = it.value().get<std::string>();
            seen[v] = 1;
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) labels[v] = "v" + std::to_string(v);
        g.set_labels(labels);
    }
    return g;
}

std::string ts_to_json(const TSGraph& ts) {
    nlohmann::json j;
    j["host"] = nlohmann::json::parse(to_json(ts.host));
    j["k"] = ts.k;
    j["nodes"] = nlohmann::json::array();
    for (const auto& s : ts.node_sets) j["nodes"].push_back(s);
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : ts.skeleton.edges()) j["edges"].push_back({a, b});
    return j.dump();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.n(); ++v) {
        out += "  n" + std::to_string(v);
        if (g.labelled()) out += " [label=\"" + dot_escape(g.label(v)) + "\"]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string ts_to_dot(const TSGraph& ts) {
    std::string out = "graph ts {\n";
    for (int i = 0; i < static_cast<int>(ts.node_sets.size()); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"{" +
               dot_escape(token_label(ts.host, ts.node_sets[i])) + "}\"];\n";
    }
    for (auto [a, b] : ts.skeleton.edges())
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

Graph read_graph_auto(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return graph_from_json(text);
    // graph6: first non-blank line
    size_t end = text.find_first_of("\r\n", i);
    std::string line = text.substr(i == std::string::npos ? 0 : i,
                                   end == std::string::npos ? std::string::npos : end - i);
    return from_graph6(line);
}

}  // namespace tokenslide
