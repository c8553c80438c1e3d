#include "recol/io.hpp"

#include <sstream>

#include "json.hpp"

namespace recol {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ContractError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                            e.what());
    }
}

}  // namespace

AnyGraph graph_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("type"))
        throw ContractError("graph JSON: missing \"type\" field");
    std::string type = j["type"].get<std::string>();
    if (type == "interval") {
        std::vector<std::pair<long long, long long>> ivs;
        for (const auto& e : j.at("intervals"))
            ivs.emplace_back(e.at(0).get<long long>(), e.at(1).get<long long>());
        return IntervalGraph(std::move(ivs));
    }
    if (type == "chordal") {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("tree_edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::vector<std::vector<int>> subtrees;
        for (const auto& s : j.at("subtrees")) subtrees.push_back(s.get<std::vector<int>>());
        int tree_n = 0;
        for (auto [a, b] : edges) tree_n = std::max({tree_n, a + 1, b + 1});
        for (const auto& s : subtrees)
            for (int t : s) tree_n = std::max(tree_n, t + 1);
        tree_n = std::max(tree_n, 1);
        return ChordalGraph(tree_n, std::move(edges), std::move(subtrees));
    }
    throw ContractError("graph JSON: unknown type \"" + type + "\"");
}

std::string graph_to_json(const IntervalGraph& g) {
    json j;
    j["type"] = "interval";
    json ivs = json::array();
    for (const auto& [l, r] : g.intervals()) ivs.push_back({l, r});
    j["intervals"] = ivs;
    return j.dump();
}

std::string graph_to_json(const ChordalGraph& g) {
    json j;
    j["type"] = "chordal";
    json edges = json::array();
    for (auto [a, b] : g.tree_edges()) edges.push_back({a, b});
    j["tree_edges"] = edges;
    j["subtrees"] = g.subtrees();
    return j.dump();
}

std::string coloring_to_json(const Coloring& c) {
    json j;
    j["colors"] = c.colors;
    j["palette"] = c.palette;
    return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    return Coloring(j.at("colors").get<std::vector<int>>(), j.at("palette").get<int>());
}

const Adjacency& adjacency_of(const AnyGraph& g) {
    if (std::holds_alternative<IntervalGraph>(g)) return std::get<IntervalGraph>(g).adj();
    return std::get<ChordalGraph>(g).adj();
}

std::string graph_to_dot(const Adjacency& adj) {
    std::ostringstream os;
    os << "graph G {\n";
    for (size_t v = 0; v < adj.size(); ++v) os << "  v" << v << ";\n";
    for (size_t v = 0; v < adj.size(); ++v)
        for (Vertex w : adj[v])
            if (w > static_cast<Vertex>(v)) os << "  v" << v << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

std::string clique_tree_to_dot(const CliqueTree& t) {
    std::ostringstream os;
    os << "graph CT {\n  node [shape=box];\n";
    for (int i = 0; i < t.size(); ++i) {
        os << "  b" << i << " [label=\"{";
        for (size_t j = 0; j < t.bags[i].size(); ++j) {
            if (j) os << ",";
            os << t.bags[i][j];
        }
        os << "}\"];\n";
    }
    for (auto [a, b] : t.edges) os << "  b" << a << " -- b" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace recol
