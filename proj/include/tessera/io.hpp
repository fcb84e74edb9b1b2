#pragma once

#include <string>

#include <json.hpp>

#include "tessera/plane_graph.hpp"
#include "tessera/rational.hpp"
#include "tessera/subgraph.hpp"

namespace tessera {

// Graph interchange ("tessera-graph-v1"): vertices carry their rotation and
// completeness flag, meta records generation parameters. Emission is
// canonical (sorted keys, fixed indent), so identical graphs produce
// byte-identical files.
nlohmann::json graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_string(const PlaneGraph& g);
PlaneGraph graph_from_string(const std::string& text);
void save_graph(const PlaneGraph& g, const std::string& path);
PlaneGraph load_graph(const std::string& path);

// Subgraph files: vertex ids, edge endpoint pairs, and faces as vertex
// cycles. Faces are accepted either as face ids or as cycles.
nlohmann::json subgraph_to_json(const Subgraph& s);
Subgraph subgraph_from_json(const PlaneGraph& host, const nlohmann::json& j);
void save_subgraph(const Subgraph& s, const std::string& path);
Subgraph load_subgraph(const PlaneGraph& host, const std::string& path);

// Exact values serialize as numerator/denominator pairs.
nlohmann::json rational_to_json(const Rational& r);

std::string to_dot(const PlaneGraph& g);
std::string to_svg(const PlaneGraph& g);

}  // namespace tessera
