#include "specio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cga {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) {
      throw InputError(std::string(what) + " entries must be strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

json word_to_json(const ColorWord& w) {
  return json{{"chain", w.chain}, {"inner", w.inner}};
}

ColorWord word_from_json(const json& j) {
  ColorWord w;
  w.chain = string_list(j.at("chain"), "chain");
  w.inner = string_list(j.at("inner"), "inner");
  return w;
}

json template_to_json(const Graph& g, const ColorTemplate& c) {
  json tubes = json::array();
  for (std::size_t i = 0; i < c.tubing.size(); ++i) {
    tubes.push_back(json{{"nodes", mask_labels(g, c.tubing[i])},
                         {"color", c.tube_words[i].chain.at(0)},
                         {"word", word_to_json(c.tube_words[i])}});
  }
  json sentinels = json::array();
  for (const ColorWord& w : c.sentinel_words) sentinels.push_back(word_to_json(w));
  return json{{"tubing", tubes},
              {"sentinels", sentinels},
              {"universal_block", c.universal_block}};
}

ColorTemplate template_from_json(const Graph& g, const json& j) {
  ColorTemplate c;
  for (const auto& e : j.at("tubing")) {
    c.tubing.push_back(labels_to_mask(g, string_list(e.at("nodes"), "nodes")));
    c.tube_words.push_back(word_from_json(e.at("word")));
  }
  for (const auto& e : j.at("sentinels")) {
    c.sentinel_words.push_back(word_from_json(e));
  }
  c.universal_block = string_list(j.at("universal_block"), "universal_block");
  return c;
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("spec must be a JSON object");
  if (!j.contains("nodes")) throw InputError("spec needs a nodes array");
  if (!j.contains("palette")) throw InputError("spec needs a palette array");
  std::vector<std::string> nodes = string_list(j.at("nodes"), "nodes");
  if (nodes.empty()) throw InputError("spec needs at least one node");
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw InputError("edges must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string()) {
        throw InputError("each edge must be a pair of node labels");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  GraphSpec spec;
  spec.graph = Graph(nodes, edges);
  std::vector<std::string> palette = string_list(j.at("palette"), "palette");
  if (palette.size() + 1 != spec.graph.size()) {
    throw InputError("palette must list exactly one color per node but one");
  }
  spec.palette = Palette::of(palette);
  return spec;
}

GraphSpec load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_spec(buf.str());
}

nlohmann::json poset_dump(const FacePoset& pos, int component) {
  if (!pos.from_templates) {
    throw InputError("only template-built posets can be dumped");
  }
  json faces = json::array();
  json covers = json::array();
  for (std::size_t i = 0; i < pos.faces.size(); ++i) {
    const Face& f = pos.faces[i];
    json jf{{"id", i}, {"rank", f.rank}};
    if (f.has_template) jf["template"] = template_to_json(pos.graph, f.tpl);
    faces.push_back(std::move(jf));
    for (int d : f.down) covers.push_back(json::array({d, i}));
  }
  json edges = json::array();
  for (auto [u, v] : pos.graph.edge_list()) {
    edges.push_back(json::array({pos.graph.label(u), pos.graph.label(v)}));
  }
  return json{{"component", component},
              {"graph", json{{"nodes", pos.graph.labels()}, {"edges", edges}}},
              {"palette", pos.palette.colors},
              {"root", template_to_json(pos.graph, pos.root)},
              {"top_rank", pos.top_rank},
              {"faces", faces},
              {"covers", covers}};
}

FacePoset poset_from_dump(const nlohmann::json& j, int* component) {
  try {
    if (component) *component = j.at("component").get<int>();
    std::vector<std::string> nodes =
        string_list(j.at("graph").at("nodes"), "nodes");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("graph").at("edges")) {
      edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    FacePoset pos;
    pos.from_templates = true;
    pos.graph = Graph(nodes, edges);
    pos.palette = Palette::of(string_list(j.at("palette"), "palette"));
    pos.root = template_from_json(pos.graph, j.at("root"));
    pos.top_rank = j.at("top_rank").get<int>();
    pos.faces.resize(j.at("faces").size());
    for (const auto& jf : j.at("faces")) {
      std::size_t id = jf.at("id").get<std::size_t>();
      if (id >= pos.faces.size()) throw InputError("face id out of range");
      Face& f = pos.faces[id];
      f.rank = jf.at("rank").get<int>();
      if (jf.contains("template")) {
        f.has_template = true;
        f.tpl = template_from_json(pos.graph, jf.at("template"));
      }
    }
    for (const auto& jc : j.at("covers")) {
      int lo = jc.at(0).get<int>();
      int hi = jc.at(1).get<int>();
      if (lo < 0 || hi < 0 || lo >= static_cast<int>(pos.faces.size()) ||
          hi >= static_cast<int>(pos.faces.size())) {
        throw InputError("cover id out of range");
      }
      pos.faces[lo].up.push_back(hi);
      pos.faces[hi].down.push_back(lo);
    }
    for (Face& f : pos.faces) {
      std::sort(f.down.begin(), f.down.end());
      std::sort(f.up.begin(), f.up.end());
    }
    return pos;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed poset dump: ") + e.what());
  }
}

std::string tube_string(const Graph& g, Tube t) {
  std::string out = "{";
  bool first = true;
  for (int v : mask_nodes(t)) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

std::string template_string(const Graph& g, const ColorTemplate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.tubing.size(); ++i) {
    if (i) out += " ";
    out += tube_string(g, c.tubing[i]) + ":" + c.tube_words[i].chain.at(0);
  }
  return out;
}

std::string skeleton_dot(const FacePoset& pos) {
  // Walks the poset directly; one_skeleton would cap the vertex count at
  // the node-mask width.
  std::vector<int> verts = pos.ids_at_rank(0);
  std::size_t width =
      std::to_string(verts.empty() ? 0 : verts.size() - 1).size();
  auto name = [&](std::size_t i) {
    std::string digits = std::to_string(i);
    return "v" + std::string(width - digits.size(), '0') + digits;
  };
  auto vertex_index = [&](int id) {
    auto it = std::lower_bound(verts.begin(), verts.end(), id);
    if (it == verts.end() || *it != id) {
      throw StructureError("rank-1 face covering a non-vertex");
    }
    return static_cast<std::size_t>(it - verts.begin());
  };
  std::ostringstream os;
  os << "graph skeleton {\n";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    os << "  " << name(i);
    if (pos.from_templates) {
      os << " [label=\""
         << template_string(pos.graph, pos.faces[verts[i]].tpl) << "\"]";
    }
    os << ";\n";
  }
  for (const Face& f : pos.faces) {
    if (f.rank != 1) continue;
    if (f.down.size() != 2) {
      throw StructureError("rank-1 face without exactly two vertices");
    }
    os << "  " << name(vertex_index(f.down[0])) << " -- "
       << name(vertex_index(f.down[1])) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const FacePoset& pos) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < pos.faces.size(); ++i) {
    os << "  f" << i << " [label=\"(" << pos.faces[i].rank << ", " << i
       << ")\"];\n";
  }
  for (std::size_t i = 0; i < pos.faces.size(); ++i) {
    for (int d : pos.faces[i].down) {
      os << "  f" << d << " -> f" << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cga
