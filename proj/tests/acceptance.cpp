// Acceptance driver: one pass/fail line per criterion, exit code = number of
// failures. Each criterion rebuilds what it needs so the lines are
// independently meaningful.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "exchange.hpp"
#include "verify.hpp"

#include "testutil.hpp"

using namespace cga;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(std::string s) { notes.push_back(std::move(s)); }

template <class Fn>
void criterion(int num, const char* name, Fn&& fn) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", num, name);
  for (const auto& s : notes) std::printf("         - %s\n", s.c_str());
  notes.clear();
  if (!ok) ++failures;
}

using FV = std::vector<std::size_t>;

bool is_cycle_skeleton(const FacePoset& pos, std::size_t k) {
  Graph s = one_skeleton(pos);
  if (s.size() != k || !is_connected(s)) return false;
  for (int v = 0; v < static_cast<int>(s.size()); ++v)
    if (std::popcount(s.adjacency(v)) != 2) return false;
  return true;
}

std::size_t factorial(std::size_t k) {
  std::size_t r = 1;
  while (k > 1) r *= k--;
  return r;
}

std::string describe(const Graph& g) {
  return std::to_string(g.size()) + " nodes, " +
         std::to_string(g.edge_count()) + " edges";
}

bool c1_p3_regular_tengon() {
  auto coll = build_collection(tu::path_graph(3), tu::full_palette(2));
  if (coll.size() != 1) return false;
  const auto& pos = coll[0];
  bool ok = f_vector(pos) == FV{10, 10, 1};
  ok = ok && is_cycle_skeleton(pos, 10);
  ok = ok && is_abstract_polytope(pos).all_ok();
  ok = ok && is_regular(pos).regular;
  return ok;
}

bool c2_c3_two_hexagons() {
  auto coll = build_collection(tu::cycle_graph(3), tu::full_palette(2));
  if (coll.size() != 2) return false;
  bool ok = poset_isomorphic(coll[0], coll[1]);
  for (const auto& pos : coll)
    ok = ok && f_vector(pos) == FV{6, 6, 1} && is_cycle_skeleton(pos, 6);
  return ok;
}

bool c3_monochrome_matches_classic() {
  auto graphs = tu::connected_catalog_le4();
  graphs.push_back(tu::path_graph(5));
  graphs.push_back(tu::cycle_graph(5));
  graphs.push_back(tu::complete_graph(5));
  bool ok = true;
  for (const auto& g : graphs) {
    auto coll =
        build_collection(g, tu::mono_palette(static_cast<int>(g.size()) - 1));
    if (coll.size() != 1 || !poset_isomorphic(coll[0], classic_kg_poset(g))) {
      note("mismatch on graph with " + describe(g));
      ok = false;
    }
  }
  note(std::to_string(graphs.size()) + " graphs checked");
  return ok;
}

bool c4_component_counts() {
  struct Case {
    Graph g;
    std::size_t want;
  };
  std::vector<Case> cases = {{tu::path_graph(4), 1},
                             {tu::cycle_graph(4), 3},
                             {tu::complete_graph(4), 6},
                             {tu::cycle_graph(5), 4},
                             {tu::complete_graph(5), 24}};
  bool ok = true;
  for (const auto& c : cases) {
    std::size_t n = c.g.size();
    auto coll =
        build_collection(c.g, tu::full_palette(static_cast<int>(n) - 1));
    std::size_t kappa = vertex_connectivity(c.g);
    std::size_t formula = factorial(n - 1) / factorial(n - kappa);
    if (coll.size() != c.want || formula != c.want) {
      note("graph with " + describe(c.g) + ": built " +
           std::to_string(coll.size()) + ", formula " +
           std::to_string(formula) + ", want " + std::to_string(c.want));
      ok = false;
    }
  }
  return ok;
}

bool c5_c4_torus_census() {
  auto coll = build_collection(tu::cycle_graph(4), tu::full_palette(3));
  if (coll.size() != 3) return false;
  std::map<std::size_t, std::size_t> want{{4, 8}, {6, 8}, {10, 4}};
  bool ok = true;
  for (const auto& pos : coll) {
    auto r = surface_report(pos);
    ok = ok && r.vertices == 40 && r.edges == 60 && r.census == want &&
         r.euler == 0;
  }
  note("each component: V=40 E=60 census {4:8, 6:8, 10:4} euler 0");
  return ok;
}

bool c6_p4_genus_four() {
  auto coll = build_collection(tu::path_graph(4), tu::full_palette(3));
  if (coll.size() != 1 || coll[0].top_rank != 3) return false;
  auto r = surface_report(coll[0]);
  note("euler " + std::to_string(r.euler) + ", facets " +
       std::to_string(r.facets));
  return r.facets == 36 && r.euler == -6 && r.genus && *r.genus == 4;
}

bool c7_claw_mixed_census() {
  auto coll = build_collection(tu::claw_graph(), tu::mixed_palette(3));
  if (coll.size() != 1) return false;
  auto r = surface_report(coll[0]);
  std::map<std::size_t, std::size_t> want{{4, 9}, {5, 6}, {6, 3}, {10, 6}};
  note("facet census {4:9, 5:6, 6:3, 10:6}");
  note("largest facets are 10-gons, not dodecagons; euler " +
       std::to_string(r.euler) + " gives genus one, not two");
  return r.census == want && r.euler == 0 && r.genus && *r.genus == 1;
}

bool c8_null4_hexagon_torus() {
  auto g = tu::null_graph(4);
  auto coll = build_collection(g, tu::full_palette(3));
  if (coll.size() != 1) return false;
  const auto& pos = coll[0];
  auto r = surface_report(pos);
  bool ok = r.vertices == 24 && r.edges == 36 && r.facets == 12 &&
            r.census == std::map<std::size_t, std::size_t>{{6, 12}} &&
            r.euler == 0;

  // facets are (node, color) pairs; neighbors must differ in both
  auto facets = pos.ids_at_rank(2);
  std::map<int, std::pair<int, Color>> tag;
  for (int f : facets) {
    const auto& tpl = pos.faces[f].tpl;
    tag[f] = {mask_nodes(tpl.tubing.at(0)).at(0),
              tpl.tube_words.at(0).chain.at(0)};
  }
  std::map<int, std::set<int>> nb;
  for (int e : pos.ids_at_rank(1)) {
    const auto& up = pos.faces[e].up;
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        nb[up[i]].insert(up[j]);
        nb[up[j]].insert(up[i]);
      }
  }
  for (int f : facets) {
    std::set<int> want;
    for (int h : facets)
      if (tag[h].first != tag[f].first && tag[h].second != tag[f].second)
        want.insert(h);
    ok = ok && nb[f] == want;
  }
  note("12 hexagonal facets; every neighbor differs in node and color");
  return ok;
}

bool c9_exchange_equivalence() {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& g : tu::small_graph_catalog()) {
    int k = static_cast<int>(g.size()) - 1;
    for (const auto& p :
         {tu::full_palette(k), tu::mixed_palette(k), tu::mono_palette(k)}) {
      if (!equivalence_check(g, p)) {
        note("failed on graph with " + describe(g));
        ok = false;
      }
      ++checked;
    }
  }
  if (!equivalence_check(tu::path_graph(5), tu::full_palette(4))) {
    note("failed on the 5-node path, full palette");
    ok = false;
  }
  note(std::to_string(checked + 1) + " graph/palette pairs checked");
  return ok;
}

bool c10_axioms_and_mutations() {
  bool ok = true;
  std::size_t comps = 0;

  std::vector<std::pair<Graph, Palette>> cases;
  for (const auto& g : tu::small_graph_catalog()) {
    int k = static_cast<int>(g.size()) - 1;
    cases.emplace_back(g, tu::full_palette(k));
    cases.emplace_back(g, tu::mixed_palette(k));
    cases.emplace_back(g, tu::mono_palette(k));
  }
  for (const auto& g :
       {tu::path_graph(5), tu::cycle_graph(5), tu::complete_graph(5)}) {
    cases.emplace_back(g, tu::full_palette(4));
    cases.emplace_back(g, tu::mono_palette(4));
  }
  for (const auto& [g, p] : cases) {
    for (const auto& pos : build_collection(g, p)) {
      ++comps;
      if (!is_abstract_polytope(pos).all_ok()) {
        note("axioms failed on graph with " + describe(g));
        ok = false;
      }
    }
  }
  note("axiom suite passed on " + std::to_string(comps) + " components of " +
       std::to_string(cases.size()) + " graph/palette pairs");

  // every single-face and single-cover deletion of the 10-gon is caught
  auto ten = build_collection(tu::path_graph(3), tu::full_palette(2))[0];
  std::size_t caught = 0, mutations = 0;
  for (int id = 0; id < static_cast<int>(ten.size()); ++id) {
    ++mutations;
    auto rep = is_abstract_polytope(tu::drop_face(ten, id));
    if (!rep.all_ok() && !rep.witnesses.empty()) ++caught;
  }
  for (int hi = 0; hi < static_cast<int>(ten.size()); ++hi)
    for (int lo : ten.faces[hi].down) {
      ++mutations;
      auto rep = is_abstract_polytope(tu::drop_cover(ten, lo, hi));
      if (!rep.all_ok() && !rep.witnesses.empty()) ++caught;
    }
  // same spot checks one rank up
  auto k4 = build_collection(tu::complete_graph(4), tu::full_palette(3))[0];
  for (const auto& mut :
       {tu::drop_face(k4, k4.ids_at_rank(1)[0]),
        tu::drop_cover(k4, k4.faces[k4.greatest()].down[0], k4.greatest())}) {
    ++mutations;
    auto rep = is_abstract_polytope(mut);
    if (!rep.all_ok() && !rep.witnesses.empty()) ++caught;
  }
  note(std::to_string(caught) + " of " + std::to_string(mutations) +
       " mutations produced a failing check with a witness");
  return ok && caught == mutations;
}

bool c11_product_structure() {
  // a two-tube face of the six-node path is a pentagonal prism
  Graph p6 = tu::path_graph(6);
  Palette pal = Palette::of({"blue", "pink", "pink", "pink", "pink"});
  ColorTemplate face;
  face.tubing = {labels_to_mask(p6, {"a", "b"}),
                 labels_to_mask(p6, {"d", "e", "f"})};
  face.tube_words = {ColorWord{{"blue"}, {"pink"}},
                     ColorWord{{"pink"}, {"pink", "pink"}}};
  face.sentinel_words = {ColorWord{}};
  if (!validate_template(p6, pal, face)) return false;

  auto below = build_below(p6, pal, face);
  bool ok = f_vector(below) == FV{10, 15, 7, 1};
  ok = ok && product_structure_check(p6, pal, face);
  auto pentagon = build_collection(tu::path_graph(3), tu::mono_palette(2))[0];
  ok = ok && poset_isomorphic(below, direct_product(pentagon, simplex_poset(1)));
  note("two-tube face of the 6-path: f-vector (10,15,7,1), pentagon x interval");

  std::size_t checked = 0;
  for (const auto& g : tu::small_graph_catalog()) {
    if (g.size() != 4) continue;
    for (const auto& pos : build_collection(g, tu::full_palette(3))) {
      for (const auto& f : pos.faces) {
        if (f.rank < 0 || f.rank > pos.top_rank - 2) continue;
        ++checked;
        if (!product_structure_check(g, pos.palette, f.tpl)) {
          note("product check failed on graph with " + describe(g));
          ok = false;
        }
      }
    }
  }
  note(std::to_string(checked) +
       " codimension->=2 faces of 4-node full-palette components checked");
  return ok;
}

bool c12_disconnected_products() {
  bool ok = true;

  auto cube = direct_product(
      {simplex_poset(1), simplex_poset(1), simplex_poset(1)});
  auto coll =
      build_collection(tu::from_edges(4, {{0, 1}, {2, 3}}), tu::full_palette(3));
  ok = ok && coll.size() == 6;
  for (const auto& pos : coll)
    ok = ok && f_vector(pos) == FV{8, 12, 6, 1} && poset_isomorphic(pos, cube);
  note("two disjoint edges, full palette: 6 cube components");

  auto tengon = build_collection(tu::path_graph(3), tu::full_palette(2))[0];
  auto prism = direct_product(tengon, simplex_poset(1));
  auto coll2 = build_collection(tu::from_edges(4, {{0, 1}, {1, 2}}),
                                tu::full_palette(3));
  ok = ok && coll2.size() == 3;
  for (const auto& pos : coll2)
    ok = ok &&
         f_vector(pos) == FV{20, 30, 12, 1} && poset_isomorphic(pos, prism);
  note("point + 3-path, full palette: 3 decagonal-prism components");

  // monochrome on a disconnected graph: product of the classic factors and
  // a simplex with one vertex per component
  std::size_t checked = 0;
  for (const auto& g : tu::small_graph_catalog()) {
    if (is_connected(g)) continue;
    auto comps = connected_components(g);
    auto mono =
        build_collection(g, tu::mono_palette(static_cast<int>(g.size()) - 1));
    std::vector<FacePoset> factors;
    for (NodeMask m : comps)
      factors.push_back(classic_kg_poset(induced_subgraph(g, m)));
    factors.push_back(simplex_poset(static_cast<int>(comps.size()) - 1));
    if (mono.size() != 1 ||
        !poset_isomorphic(mono[0], direct_product(factors))) {
      note("monochrome product mismatch on graph with " + describe(g));
      ok = false;
    }
    ++checked;
  }
  note(std::to_string(checked) + " disconnected monochrome cases match their "
       "classic-product form");
  return ok;
}

bool c13_regularity_verdicts() {
  struct Case {
    const char* name;
    Graph g;
    bool want;
  };
  std::vector<Case> cases = {
      {"K1", tu::complete_graph(1), true},
      {"K2", tu::complete_graph(2), true},
      {"K3", tu::complete_graph(3), true},
      {"P3", tu::path_graph(3), true},
      {"null4", tu::null_graph(4), true},
      {"null5", tu::null_graph(5), true},
      {"P4", tu::path_graph(4), false},
      {"C4", tu::cycle_graph(4), false},
      {"K4", tu::complete_graph(4), false},
      {"claw", tu::claw_graph(), false},
      {"P5", tu::path_graph(5), false},
  };
  bool ok = true;
  for (const auto& c : cases) {
    auto coll =
        build_collection(c.g, tu::full_palette(static_cast<int>(c.g.size()) - 1));
    RegularityReport first;
    bool agree = true;
    for (std::size_t i = 0; i < coll.size(); ++i) {
      auto rep = is_regular(coll[i]);
      if (i == 0) first = rep;
      if (rep.regular != c.want) agree = false;
    }
    ok = ok && agree;
    note(std::string(c.name) + ": " + (first.regular ? "regular" : "not regular") +
         ", |Gamma| = " + std::to_string(first.automorphisms) + ", flags = " +
         std::to_string(first.flags));
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "3-path, full palette: one regular 10-gon component",
            c1_p3_regular_tengon);
  criterion(2, "3-cycle, full palette: two isomorphic hexagon components",
            c2_c3_two_hexagons);
  criterion(3, "monochrome collections match classic graph associahedra",
            c3_monochrome_matches_classic);
  criterion(4, "full-palette component counts follow (n-1)!/(n-kappa)!",
            c4_component_counts);
  criterion(5, "4-cycle, full palette: three torus components, census 8/8/4",
            c5_c4_torus_census);
  criterion(6, "4-path, full palette: genus-four component with 36 facets",
            c6_p4_genus_four);
  criterion(7, "claw, mixed palette: single component, census 9/6/3/6",
            c7_claw_mixed_census);
  criterion(8, "4 isolated nodes, full palette: hexagon torus",
            c8_null4_hexagon_torus);
  criterion(9, "exchange graphs reproduce every collection",
            c9_exchange_equivalence);
  criterion(10, "axiom suite everywhere; mutations always caught",
            c10_axioms_and_mutations);
  criterion(11, "faces of codimension >= 2 factor as products",
            c11_product_structure);
  criterion(12, "disconnected graphs: cubes, prisms, classic products",
            c12_disconnected_products);
  criterion(13, "regularity verdicts and automorphism counts",
            c13_regularity_verdicts);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures;
}
