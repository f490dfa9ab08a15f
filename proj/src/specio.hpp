#pragma once

#include <string>

#include <json.hpp>

#include "poset.hpp"

namespace cga {

struct GraphSpec {
  Graph graph;
  Palette palette;
};

// JSON spec: {"nodes": [...], "edges": [["a","b"], ...], "palette": [...]}.
GraphSpec parse_graph_spec(const std::string& text);
GraphSpec load_graph_spec(const std::string& path);

// Lossless dump of a template-built poset.
nlohmann::json poset_dump(const FacePoset& pos, int component);
FacePoset poset_from_dump(const nlohmann::json& j, int* component = nullptr);

// "{a,b}" with labels in canonical node order.
std::string tube_string(const Graph& g, Tube t);
// Colored tubes of a template: "{a}:red {a,b}:blue" (canonical tube order).
std::string template_string(const Graph& g, const ColorTemplate& c);

// DOT renderings; node order and edge order are deterministic.
std::string skeleton_dot(const FacePoset& pos);
std::string hasse_dot(const FacePoset& pos);

}  // namespace cga
