#pragma once

#include <string>
#include <variant>

#include "recol/clique.hpp"
#include "recol/graph.hpp"

namespace recol {

using AnyGraph = std::variant<IntervalGraph, ChordalGraph>;

/// Parses {"type":"interval","intervals":[[l,r],...]} or
/// {"type":"chordal","tree_edges":[[a,b],...],"subtrees":[[node,...],...]}.
/// Malformed JSON raises ContractError carrying the byte offset.
AnyGraph graph_from_json(const std::string& text);
std::string graph_to_json(const IntervalGraph& g);
std::string graph_to_json(const ChordalGraph& g);

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

const Adjacency& adjacency_of(const AnyGraph& g);

std::string graph_to_dot(const Adjacency& adj);
std::string clique_tree_to_dot(const CliqueTree& t);

}  // namespace recol
