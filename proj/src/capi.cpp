#include "cga/cga.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "exchange.hpp"
#include "specio.hpp"
#include "verify.hpp"

using nlohmann::json;

struct cga_spec {
  cga::GraphSpec spec;
};

struct cga_collection {
  cga::GraphSpec spec;
  std::vector<cga::FacePoset> posets;
};

namespace {

thread_local std::string g_last_error;

constexpr std::size_t kDefaultProductCap = 64;

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
cga_status guarded(F&& body) {
  try {
    body();
    return CGA_OK;
  } catch (const cga::InputError& e) {
    g_last_error = e.what();
    return CGA_ERROR_INPUT;
  } catch (const cga::ResourceError& e) {
    g_last_error = e.what();
    return CGA_ERROR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CGA_ERROR_INTERNAL;
  }
}

cga_status need(bool ok, const char* message) {
  if (ok) return CGA_OK;
  g_last_error = message;
  return CGA_ERROR_INPUT;
}

json axioms_to_json(const cga::AxiomReport& a) {
  return json{{"bounded", a.bounded},
              {"flag_length", a.flag_length_ok},
              {"diamond", a.diamond_ok},
              {"strongly_flag_connected", a.strongly_flag_connected},
              {"simple", a.simple},
              {"all", a.all_ok()},
              {"witnesses", a.witnesses}};
}

json surface_to_json(const cga::SurfaceReport& s) {
  json census = json::object();
  for (auto [size, count] : s.census) {
    census[std::to_string(size)] = count;
  }
  json j{{"vertices", s.vertices}, {"edges", s.edges},
         {"facets", s.facets},    {"census", census},
         {"euler", s.euler},      {"pseudomanifold", s.pseudomanifold_ok}};
  if (s.genus) {
    j["genus"] = *s.genus;
    std::ostringstream note;
    note << "boundary is a closed orientable surface: euler " << s.euler
         << ", genus " << *s.genus;
    j["note"] = note.str();
  } else {
    j["genus"] = nullptr;
    j["note"] = "boundary is not certified as a closed orientable surface";
  }
  return j;
}

json root_to_json(const cga::Graph& g, const cga::RootTemplate& root) {
  json chains = json::array();
  json inners = json::array();
  for (const cga::ColorWord& w : root.sentinel_words) {
    chains.push_back(w.chain);
    inners.push_back(w.inner);
  }
  (void)g;
  return json{{"chains", chains},
              {"inners", inners},
              {"universal_block", root.universal_block}};
}

}  // namespace

extern "C" {

const char* cga_last_error(void) { return g_last_error.c_str(); }

void cga_string_free(char* s) { delete[] s; }

cga_status cga_spec_parse(const char* json_text, const char* palette_override,
                          cga_spec** out) {
  if (cga_status st = need(json_text && out, "null argument"); st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    auto spec = std::make_unique<cga_spec>();
    spec->spec = cga::parse_graph_spec(json_text);
    if (palette_override && *palette_override) {
      std::vector<std::string> colors;
      std::istringstream in(palette_override);
      std::string color;
      while (std::getline(in, color, ',')) colors.push_back(color);
      if (colors.size() + 1 != spec->spec.graph.size()) {
        throw cga::InputError(
            "palette override must list exactly one color per node but one");
      }
      spec->spec.palette = cga::Palette::of(colors);
    }
    *out = spec.release();
  });
}

void cga_spec_free(cga_spec* spec) { delete spec; }

cga_status cga_spec_tubes_json(const cga_spec* spec, char** out_json) {
  if (cga_status st = need(spec && out_json, "null argument"); st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    const cga::Graph& g = spec->spec.graph;
    auto comps = cga::connected_components(g);
    json tubes = json::array();
    std::size_t inner = 0, outer = 0, component = 0;
    for (cga::Tube t : cga::enumerate_tubes(g)) {
      std::string kind;
      auto owner = std::find_if(comps.begin(), comps.end(), [&](cga::NodeMask c) {
        return (t & c) == t;
      });
      if (owner == comps.end()) {
        throw cga::StructureError("tube outside every component");
      }
      if (*owner == t) {
        kind = "component";
        ++component;
      } else {
        cga::Graph cg = cga::induced_subgraph(g, *owner);
        cga::Tube local = cga::labels_to_mask(cg, cga::mask_labels(g, t));
        kind = cga::classify_tube(cg, local) == cga::TubeKind::kInner
                   ? "inner"
                   : "outer";
        ++(kind == "inner" ? inner : outer);
      }
      tubes.push_back(json{{"nodes", cga::mask_labels(g, t)}, {"kind", kind}});
    }
    json j{{"tubes", tubes},
           {"count", tubes.size()},
           {"inner", inner},
           {"outer", outer},
           {"component", component}};
    *out_json = copy_out(j.dump(2));
  });
}

cga_status cga_build(const cga_spec* spec, size_t max_faces,
                     cga_collection** out) {
  if (cga_status st = need(spec && out, "null argument"); st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    auto c = std::make_unique<cga_collection>();
    c->spec = spec->spec;
    std::size_t guard = max_faces ? max_faces : cga::kDefaultMaxFaces;
    c->posets = cga::build_collection(spec->spec.graph, spec->spec.palette, guard);
    *out = c.release();
  });
}

void cga_collection_free(cga_collection* c) { delete c; }

size_t cga_collection_size(const cga_collection* c) {
  return c ? c->posets.size() : 0;
}

cga_status cga_component_summary_json(const cga_collection* c, size_t index,
                                      char** out_json) {
  if (cga_status st = need(c && out_json && index < c->posets.size(),
                           "component index out of range");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    const cga::FacePoset& pos = c->posets[index];
    json j{{"component", index},
           {"root", root_to_json(pos.graph, pos.root)},
           {"faces", pos.size()},
           {"f_vector", cga::f_vector(pos)},
           {"top_rank", pos.top_rank}};
    *out_json = copy_out(j.dump(2));
  });
}

cga_status cga_component_dump_json(const cga_collection* c, size_t index,
                                   char** out_json) {
  if (cga_status st = need(c && out_json && index < c->posets.size(),
                           "component index out of range");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    *out_json = copy_out(
        cga::poset_dump(c->posets[index], static_cast<int>(index)).dump(2));
  });
}

cga_status cga_component_verify_json(const cga_collection* c, size_t index,
                                     int* all_ok, char** out_json) {
  if (cga_status st = need(c && all_ok && out_json && index < c->posets.size(),
                           "component index out of range");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    const cga::FacePoset& pos = c->posets[index];
    cga::AxiomReport axioms = cga::is_abstract_polytope(pos);
    json j{{"component", index}, {"axioms", axioms_to_json(axioms)}};
    if (pos.top_rank == 3) {
      j["surface"] = surface_to_json(cga::surface_report(pos));
    } else {
      j["surface"] = nullptr;
    }
    cga::RegularityReport reg = cga::is_regular(pos);
    j["regular"] = json{{"regular", reg.regular},
                        {"automorphisms", reg.automorphisms},
                        {"flags", reg.flags}};
    *all_ok = axioms.all_ok() ? 1 : 0;
    *out_json = copy_out(j.dump(2));
  });
}

cga_status cga_component_skeleton_dot(const cga_collection* c, size_t index,
                                      char** out_dot) {
  if (cga_status st = need(c && out_dot && index < c->posets.size(),
                           "component index out of range");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] { *out_dot = copy_out(cga::skeleton_dot(c->posets[index])); });
}

cga_status cga_component_hasse_dot(const cga_collection* c, size_t index,
                                   char** out_dot) {
  if (cga_status st = need(c && out_dot && index < c->posets.size(),
                           "component index out of range");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] { *out_dot = copy_out(cga::hasse_dot(c->posets[index])); });
}

cga_status cga_oracle_json(const cga_spec* spec, size_t max_faces,
                           size_t product_cap, int* all_ok, char** out_json) {
  if (cga_status st = need(spec && all_ok && out_json, "null argument");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    const cga::Graph& g = spec->spec.graph;
    const cga::Palette& p = spec->spec.palette;
    std::size_t guard = max_faces ? max_faces : cga::kDefaultMaxFaces;
    std::size_t cap = product_cap ? product_cap : kDefaultProductCap;

    // Monochrome collection against the classic tubing poset.
    cga::Palette mono =
        cga::Palette::of(std::vector<std::string>(p.size(), p.colors.at(0)));
    std::vector<cga::FacePoset> mono_posets = cga::build_collection(g, mono, guard);
    bool monochrome_ok =
        mono_posets.size() == 1 &&
        cga::poset_isomorphic(mono_posets[0], cga::classic_kg_poset(g, guard));

    bool exchange_ok = cga::equivalence_check(g, p, guard);

    std::vector<cga::FacePoset> posets = cga::build_collection(g, p, guard);
    bool product_ok = true;
    for (const cga::FacePoset& pos : posets) {
      std::size_t checked = 0;
      for (const cga::Face& f : pos.faces) {
        if (!f.has_template || f.rank > pos.top_rank - 2) continue;
        if (checked++ >= cap) break;
        if (!cga::product_structure_check(g, p, f.tpl, guard)) {
          product_ok = false;
        }
      }
    }
    if (cga::connected_components(g).size() > 1) {
      product_ok = product_ok && cga::disconnected_product_check(g, p, guard);
    }

    json regularity = json::array();
    for (std::size_t i = 0; i < posets.size(); ++i) {
      cga::RegularityReport rep = cga::is_regular(posets[i]);
      regularity.push_back(json{{"component", i},
                                {"regular", rep.regular},
                                {"automorphisms", rep.automorphisms},
                                {"flags", rep.flags}});
    }

    bool ok = monochrome_ok && exchange_ok && product_ok;
    json j{{"monochrome_ok", monochrome_ok},
           {"exchange_ok", exchange_ok},
           {"product_ok", product_ok},
           {"regularity", regularity},
           {"all_ok", ok}};
    *all_ok = ok ? 1 : 0;
    *out_json = copy_out(j.dump(2));
  });
}

cga_status cga_input_is_dump(const char* json_text, int* is_dump) {
  if (cga_status st = need(json_text && is_dump, "null argument");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    json j;
    try {
      j = json::parse(json_text);
    } catch (const json::exception& e) {
      throw cga::InputError(std::string("input is not valid JSON: ") + e.what());
    }
    *is_dump = j.is_object() && j.contains("faces") && j.contains("covers") ? 1 : 0;
  });
}

cga_status cga_dump_verify_json(const char* dump_json, int* all_ok,
                                char** out_json) {
  if (cga_status st = need(dump_json && all_ok && out_json, "null argument");
      st != CGA_OK) {
    return st;
  }
  return guarded([&] {
    json j;
    try {
      j = json::parse(dump_json);
    } catch (const json::exception& e) {
      throw cga::InputError(std::string("dump is not valid JSON: ") + e.what());
    }
    int component = 0;
    cga::FacePoset pos = cga::poset_from_dump(j, &component);
    cga::AxiomReport axioms = cga::is_abstract_polytope(pos);
    json out{{"component", component}, {"axioms", axioms_to_json(axioms)}};
    if (pos.top_rank == 3) {
      out["surface"] = surface_to_json(cga::surface_report(pos));
    } else {
      out["surface"] = nullptr;
    }
    cga::RegularityReport reg = cga::is_regular(pos);
    out["regular"] = json{{"regular", reg.regular},
                          {"automorphisms", reg.automorphisms},
                          {"flags", reg.flags}};
    *all_ok = axioms.all_ok() ? 1 : 0;
    *out_json = copy_out(out.dump(2));
  });
}

}  // extern "C"
