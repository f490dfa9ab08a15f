#include <doctest.h>

#include <algorithm>

#include "coloring.hpp"
#include "graph.hpp"
#include "poset.hpp"
#include "testutil.hpp"
#include "tubing.hpp"
#include "verify.hpp"

using namespace cga;

namespace {
FacePoset ten_gon() {
  return build_collection(tu::path_graph(3), tu::full_palette(2), kDefaultMaxFaces)[0];
}
}  // namespace

TEST_CASE("axiom suite passes on small components") {
  std::vector<Palette (*)(int)> palettes = {tu::full_palette, tu::mono_palette,
                                            tu::mixed_palette};
  for (const auto& g : tu::small_graph_catalog()) {
    if (g.size() < 2) continue;
    for (auto mk : palettes) {
      auto p = mk(static_cast<int>(g.size()) - 1);
      for (const auto& pos : build_collection(g, p, kDefaultMaxFaces)) {
        auto rep = is_abstract_polytope(pos);
        CHECK(rep.all_ok());
        if (!rep.all_ok()) {
          for (const auto& w : rep.witnesses) MESSAGE(w);
        }
      }
    }
  }
}

TEST_CASE("axiom suite passes on classic posets") {
  for (const auto& g : {tu::path_graph(4), tu::complete_graph(4), tu::cycle_graph(4)}) {
    auto rep = is_abstract_polytope(classic_kg_poset(g, kDefaultMaxFaces));
    CHECK(rep.all_ok());
  }
}

TEST_CASE("deleting any face breaks some axiom") {
  auto pos = ten_gon();
  for (int id = 0; id < static_cast<int>(pos.faces.size()); ++id) {
    auto mutant = tu::drop_face(pos, id);
    auto rep = is_abstract_polytope(mutant);
    CHECK_FALSE(rep.all_ok());
    CHECK(!rep.witnesses.empty());
  }
}

TEST_CASE("deleting any cover breaks some axiom") {
  auto pos = ten_gon();
  int pairs = 0;
  for (int lo = 0; lo < static_cast<int>(pos.faces.size()); ++lo) {
    for (int hi : pos.faces[lo].up) {
      auto mutant = tu::drop_cover(pos, lo, hi);
      auto rep = is_abstract_polytope(mutant);
      CHECK_FALSE(rep.all_ok());
      CHECK(!rep.witnesses.empty());
      ++pairs;
    }
  }
  CHECK(pairs == 40);  // 10 + 20 + 10 covers in the ten-gon lattice
}

TEST_CASE("diamond witness names the offending pair") {
  auto pos = ten_gon();
  // remove one edge face entirely: the rectangle above its vertices thins out
  int edge = pos.ids_at_rank(1)[0];
  auto mutant = tu::drop_face(pos, edge);
  std::vector<std::string> witnesses;
  bool diamond = check_diamond(mutant, &witnesses);
  bool flag_len = check_flag_length(mutant, nullptr);
  CHECK((!diamond || !flag_len));
  auto rep = is_abstract_polytope(mutant);
  REQUIRE(!rep.witnesses.empty());
}

TEST_CASE("two polygons glued at bottom and top fail flag connectivity") {
  // hexagon faces duplicated side by side sharing only least and greatest
  auto hexa = build_collection(tu::cycle_graph(3), tu::full_palette(2),
                               kDefaultMaxFaces)[0];
  FacePoset glued;
  glued.top_rank = hexa.top_rank;
  glued.from_templates = false;
  int hsize = static_cast<int>(hexa.faces.size());
  auto remap = [&](int id, int copy) {
    if (id == 0) return 0;
    if (id == hsize - 1) return 2 * (hsize - 2) + 1;
    return id + copy * (hsize - 2);
  };
  glued.faces.resize(2 * (hsize - 2) + 2);
  glued.faces[0].rank = -1;
  glued.faces[0].has_template = false;
  glued.faces.back().rank = hexa.top_rank;
  glued.faces.back().has_template = false;
  for (int copy = 0; copy < 2; ++copy) {
    for (int id = 1; id + 1 < hsize; ++id) {
      auto& f = glued.faces[remap(id, copy)];
      f.rank = hexa.faces[id].rank;
      f.has_template = false;
      for (int d : hexa.faces[id].down) f.down.push_back(remap(d, copy));
      for (int u : hexa.faces[id].up) f.up.push_back(remap(u, copy));
    }
  }
  for (int copy = 0; copy < 2; ++copy) {
    for (int id = 1; id + 1 < hsize; ++id) {
      if (hexa.faces[id].rank == 0) glued.faces[0].up.push_back(remap(id, copy));
      if (hexa.faces[id].rank == hexa.top_rank - 1)
        glued.faces.back().down.push_back(remap(id, copy));
    }
  }
  std::sort(glued.faces[0].up.begin(), glued.faces[0].up.end());
  std::sort(glued.faces.back().down.begin(), glued.faces.back().down.end());

  CHECK(check_bounded(glued, nullptr));
  CHECK(check_diamond(glued, nullptr));
  std::vector<std::string> w;
  CHECK_FALSE(check_strong_flag_connectivity(glued, &w));
  CHECK(!w.empty());
  CHECK_FALSE(is_abstract_polytope(glued).all_ok());
}

TEST_CASE("simplicity fails when a vertex sits under too few edges") {
  auto interval = classic_kg_poset(tu::complete_graph(2), kDefaultMaxFaces);
  auto cube = direct_product(direct_product(interval, interval), interval);
  // delete one edge: its endpoints now lie under two edges only
  int edge = cube.ids_at_rank(1)[0];
  auto mutant = tu::drop_face(cube, edge);
  auto rep = is_abstract_polytope(mutant);
  CHECK_FALSE(rep.all_ok());
}

TEST_CASE("surface report for the ten-gon collection is empty") {
  // rank-2 posets are not rank-3 surfaces
  auto pos = ten_gon();
  CHECK_THROWS_AS(surface_report(pos), InputError);
}

TEST_CASE("surface reports on rank-3 components") {
  auto c4 = build_collection(tu::cycle_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(c4.size() == 3);
  for (const auto& pos : c4) {
    auto rep = surface_report(pos);
    CHECK(rep.vertices == 40);
    CHECK(rep.edges == 60);
    CHECK(rep.facets == 20);
    CHECK(rep.census == std::map<std::size_t, std::size_t>{{4, 8}, {6, 8}, {10, 4}});
    CHECK(rep.euler == 0);
    CHECK(rep.pseudomanifold_ok);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 1);
  }

  auto p4 = build_collection(tu::path_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(p4.size() == 1);
  auto rep = surface_report(p4[0]);
  CHECK(rep.vertices == 84);
  CHECK(rep.edges == 126);
  CHECK(rep.facets == 36);
  CHECK(rep.euler == -6);
  CHECK(rep.pseudomanifold_ok);
  REQUIRE(rep.genus.has_value());
  CHECK(*rep.genus == 4);
}

TEST_CASE("claw with a mixed palette tiles a torus") {
  auto col = build_collection(tu::claw_graph(), tu::mixed_palette(3), kDefaultMaxFaces);
  REQUIRE(col.size() == 1);
  auto rep = surface_report(col[0]);
  CHECK(rep.vertices == 48);
  CHECK(rep.edges == 72);
  CHECK(rep.facets == 24);
  CHECK(rep.census == std::map<std::size_t, std::size_t>{{4, 9}, {5, 6}, {6, 3}, {10, 6}});
  CHECK(rep.euler == 0);
  REQUIRE(rep.genus.has_value());
  CHECK(*rep.genus == 1);
}

TEST_CASE("null graph component tiles a torus by hexagons") {
  auto col = build_collection(tu::null_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(col.size() == 1);
  auto rep = surface_report(col[0]);
  CHECK(rep.census == std::map<std::size_t, std::size_t>{{6, 12}});
  CHECK(rep.euler == 0);
  CHECK(rep.pseudomanifold_ok);
}

TEST_CASE("cube boundary is a sphere") {
  auto interval = classic_kg_poset(tu::complete_graph(2), kDefaultMaxFaces);
  auto cube = direct_product(direct_product(interval, interval), interval);
  auto rep = surface_report(cube);
  CHECK(rep.census == std::map<std::size_t, std::size_t>{{4, 6}});
  CHECK(rep.euler == 2);
  REQUIRE(rep.genus.has_value());
  CHECK(*rep.genus == 0);
}

TEST_CASE("isomorphism distinguishes polygons") {
  auto pentagon = classic_kg_poset(tu::path_graph(3), kDefaultMaxFaces);
  auto hexagon = classic_kg_poset(tu::cycle_graph(3), kDefaultMaxFaces);
  CHECK(poset_isomorphic(pentagon, pentagon));
  CHECK_FALSE(poset_isomorphic(pentagon, hexagon));
  auto ten = ten_gon();
  CHECK_FALSE(poset_isomorphic(pentagon, ten));
}

TEST_CASE("components of one collection are isomorphic copies") {
  auto k4 = build_collection(tu::complete_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(k4.size() == 6);
  for (std::size_t i = 1; i < k4.size(); ++i) CHECK(poset_isomorphic(k4[0], k4[i]));
}

TEST_CASE("monochrome collections match the classic poset") {
  for (const auto& g : tu::connected_catalog_le4()) {
    if (g.size() < 2) continue;
    auto col = build_collection(g, tu::mono_palette(static_cast<int>(g.size()) - 1),
                                kDefaultMaxFaces);
    REQUIRE(col.size() == 1);
    CHECK(poset_isomorphic(col[0], classic_kg_poset(g, kDefaultMaxFaces)));
  }
}

TEST_CASE("regularity of polygons and small cases") {
  auto ten = ten_gon();
  auto rep = is_regular(ten);
  CHECK(rep.regular);
  CHECK(rep.flags == 20);
  CHECK(rep.automorphisms == 20);

  auto pentagon = classic_kg_poset(tu::path_graph(3), kDefaultMaxFaces);
  auto prep = is_regular(pentagon);
  CHECK(prep.regular);
  CHECK(prep.automorphisms == 10);

  auto p4 = build_collection(tu::path_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  auto p4rep = is_regular(p4[0]);
  CHECK_FALSE(p4rep.regular);
  CHECK(p4rep.automorphisms < p4rep.flags);

  auto null4 = build_collection(tu::null_graph(4), tu::full_palette(3), kDefaultMaxFaces);
  auto nrep = is_regular(null4[0]);
  CHECK(nrep.regular);
  CHECK(nrep.flags == 24 * 6);
  CHECK(nrep.automorphisms == 144);
}

TEST_CASE("pentagonal prism face splits as a product") {
  // path on six nodes with tubes {a,b} and {d,e,f}; three colors pink and
  // the rest forced so the factors are an interval and a pentagon
  auto g = tu::path_graph(6);
  std::vector<std::string> colors = {"pink", "pink", "pink", "pink", "blue"};
  auto p = Palette::of(colors);

  ColorTemplate face;
  face.tubing = {labels_to_mask(g, {"a", "b"}), labels_to_mask(g, {"d", "e", "f"})};
  std::sort(face.tubing.begin(), face.tubing.end(), tube_less);
  ColorWord w_ab;
  w_ab.chain = {"blue"};
  w_ab.inner = {"pink"};
  ColorWord w_def;
  w_def.chain = {"pink"};
  w_def.inner = {"pink", "pink"};
  // tube order: {a,b} before {d,e,f} by size then lowest node
  face.tube_words = {w_ab, w_def};
  ColorWord sentinel;  // core is just {c}
  face.sentinel_words = {sentinel};
  REQUIRE(validate_template(g, p, face));

  auto below = build_below(g, p, face, kDefaultMaxFaces);
  CHECK(f_vector(below) == std::vector<std::size_t>{10, 15, 7, 1});
  CHECK(product_structure_check(g, p, face, kDefaultMaxFaces));

  auto pentagon = classic_kg_poset(tu::path_graph(3), kDefaultMaxFaces);
  auto interval = classic_kg_poset(tu::complete_graph(2), kDefaultMaxFaces);
  CHECK(poset_isomorphic(below, direct_product(pentagon, interval)));
}

TEST_CASE("every low face of full-palette four-node components splits") {
  for (const auto& g : {tu::path_graph(4), tu::claw_graph(), tu::cycle_graph(4)}) {
    auto p = tu::full_palette(3);
    for (const auto& pos : build_collection(g, p, kDefaultMaxFaces)) {
      for (const auto& f : pos.faces) {
        if (!f.has_template || f.rank > pos.top_rank - 2) continue;
        CHECK(product_structure_check(g, p, f.tpl, kDefaultMaxFaces));
      }
    }
  }
}

TEST_CASE("disconnected graphs build products of their pieces") {
  auto two_paths = tu::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(disconnected_product_check(two_paths, tu::full_palette(3), kDefaultMaxFaces));
  auto point_path = tu::from_edges(4, {{1, 2}, {2, 3}});
  CHECK(disconnected_product_check(point_path, tu::full_palette(3), kDefaultMaxFaces));
  CHECK(disconnected_product_check(two_paths, tu::mono_palette(3), kDefaultMaxFaces));
  CHECK_THROWS_AS(disconnected_product_check(tu::path_graph(3), tu::full_palette(2),
                                             kDefaultMaxFaces),
                  InputError);
}

TEST_CASE("two-path components are cubes") {
  auto two_paths = tu::from_edges(4, {{0, 1}, {2, 3}});
  auto col = build_collection(two_paths, tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(col.size() == 6);
  for (const auto& pos : col) {
    CHECK(f_vector(pos) == std::vector<std::size_t>{8, 12, 6, 1});
    CHECK(poset_isomorphic(pos, tu::brute_cube_poset()));
  }
}

TEST_CASE("point and path components are decagonal prisms") {
  auto g = tu::from_edges(4, {{1, 2}, {2, 3}});  // K1 + P3
  auto col = build_collection(g, tu::full_palette(3), kDefaultMaxFaces);
  REQUIRE(col.size() == 3);
  auto ten = ten_gon();
  auto interval = classic_kg_poset(tu::complete_graph(2), kDefaultMaxFaces);
  auto prism = direct_product(ten, interval);
  for (const auto& pos : col) {
    CHECK(f_vector(pos) == std::vector<std::size_t>{20, 30, 12, 1});
    CHECK(poset_isomorphic(pos, prism));
  }
}
