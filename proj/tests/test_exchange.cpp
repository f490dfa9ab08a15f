#include <doctest.h>

#include <algorithm>
#include <bit>

#include "coloring.hpp"
#include "exchange.hpp"
#include "graph.hpp"
#include "poset.hpp"
#include "testutil.hpp"
#include "tubing.hpp"
#include "verify.hpp"

using namespace cga;

TEST_CASE("exchange graph of the path on three nodes is a ten-cycle") {
  auto g = tu::path_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  CHECK(eg.nodes.size() == 10);  // 5 maximal tubings, 2 colorings each
  CHECK(eg.edges.size() == 10);
  for (const auto& nbrs : eg.adj) CHECK(nbrs.size() == 2);
  auto comps = exchange_components(eg);
  CHECK(comps.size() == 1);
}

TEST_CASE("exchange nodes pair maximal tubings with arrangements") {
  auto g = tu::cycle_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  CHECK(eg.nodes.size() == 12);
  auto comps = exchange_components(eg);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 6);
  CHECK(comps[1].size() == 6);
}

TEST_CASE("every exchange node has degree n minus one") {
  std::vector<Palette (*)(int)> palettes = {tu::full_palette, tu::mono_palette,
                                            tu::mixed_palette};
  for (const auto& g : tu::small_graph_catalog()) {
    if (g.size() < 2) continue;
    for (auto mk : palettes) {
      auto p = mk(static_cast<int>(g.size()) - 1);
      auto eg = build_exchange_graph(g, p, kDefaultMaxFaces);
      for (const auto& nbrs : eg.adj)
        CHECK(nbrs.size() == g.size() - 1);
    }
  }
}

TEST_CASE("exchange moves swap one colored tube") {
  auto g = tu::path_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  for (std::size_t v = 0; v < eg.nodes.size(); ++v) {
    for (int u : eg.adj[v]) {
      const auto& a = eg.nodes[v];
      const auto& b = eg.nodes[static_cast<std::size_t>(u)];
      // exactly one tube differs, same color on the swapped pair
      std::vector<std::pair<Tube, std::string>> only_a, only_b;
      for (std::size_t i = 0; i < a.tubing.size(); ++i) {
        bool shared = false;
        for (std::size_t j = 0; j < b.tubing.size(); ++j)
          if (a.tubing[i] == b.tubing[j] && a.color_of[i] == b.color_of[j]) shared = true;
        if (!shared) only_a.push_back({a.tubing[i], a.color_of[i]});
      }
      for (std::size_t j = 0; j < b.tubing.size(); ++j) {
        bool shared = false;
        for (std::size_t i = 0; i < a.tubing.size(); ++i)
          if (a.tubing[i] == b.tubing[j] && a.color_of[i] == b.color_of[j]) shared = true;
        if (!shared) only_b.push_back({b.tubing[j], b.color_of[j]});
      }
      REQUIRE(only_a.size() == 1);
      REQUIRE(only_b.size() == 1);
      CHECK(only_a[0].first != only_b[0].first);
      CHECK(only_a[0].second == only_b[0].second);
    }
  }
}

TEST_CASE("color matching splits components of the triangle") {
  auto g = tu::cycle_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  auto comps = exchange_components(eg);
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        CHECK(color_matched(g, eg.nodes[comp[i]], eg.nodes[comp[j]]));
  }
  // nodes in different components disagree on some outer color
  CHECK_FALSE(color_matched(g, eg.nodes[comps[0][0]], eg.nodes[comps[1][0]]));
}

TEST_CASE("color matching rejects disconnected graphs") {
  auto g = tu::from_edges(4, {{0, 1}, {2, 3}});
  auto eg = build_exchange_graph(g, tu::full_palette(3), kDefaultMaxFaces);
  CHECK_THROWS_AS(color_matched(g, eg.nodes[0], eg.nodes[1]), InputError);
}

TEST_CASE("reachable faces interpolate between vertex and component") {
  auto g = tu::path_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  auto comps = exchange_components(eg);
  REQUIRE(comps.size() == 1);
  int v = comps[0][0];
  const auto& node = eg.nodes[static_cast<std::size_t>(v)];

  // full fragment pins the vertex
  ColoredFragment full;
  for (std::size_t i = 0; i < node.tubing.size(); ++i)
    full.push_back({node.tubing[i], node.color_of[i]});
  CHECK(reachable_face(eg, full, v) == std::vector<int>{v});

  // empty fragment reaches the whole component
  CHECK(reachable_face(eg, {}, v).size() == 10);

  // one colored tube keeps both of its endpoints
  ColoredFragment one = {full[0]};
  auto face = reachable_face(eg, one, v);
  CHECK(face.size() == 2);

  ColoredFragment absent = {{full[0].first, "nope"}};
  CHECK_THROWS_AS(reachable_face(eg, absent, v), InputError);
}

TEST_CASE("fragment poset of the path matches the built component") {
  auto g = tu::path_graph(3);
  auto p = tu::full_palette(2);
  auto eg = build_exchange_graph(g, p, kDefaultMaxFaces);
  auto comps = exchange_components(eg);
  auto peg = build_peg_poset(eg, comps[0]);
  CHECK(f_vector(peg) == std::vector<std::size_t>{10, 10, 1});
  auto col = build_collection(g, p, kDefaultMaxFaces);
  CHECK(poset_isomorphic(peg, col[0]));
}

TEST_CASE("fragment poset of the null graph on three nodes is a hexagon") {
  auto g = tu::null_graph(3);
  auto eg = build_exchange_graph(g, tu::full_palette(2), kDefaultMaxFaces);
  auto comps = exchange_components(eg);
  REQUIRE(comps.size() == 1);
  auto peg = build_peg_poset(eg, comps[0]);
  CHECK(f_vector(peg) == std::vector<std::size_t>{6, 6, 1});
}

TEST_CASE("roots recovered from exchange nodes") {
  auto g = tu::complete_graph(4);
  auto p = tu::full_palette(3);
  auto eg = build_exchange_graph(g, p, kDefaultMaxFaces);
  auto roots = root_templates(g, p);
  auto comps = exchange_components(eg);
  REQUIRE(comps.size() == 6);
  for (const auto& comp : comps) {
    auto r0 = root_of_node(g, eg.nodes[comp[0]]);
    for (std::size_t i = 1; i < comp.size(); ++i)
      CHECK(root_of_node(g, eg.nodes[comp[i]]) == r0);
    CHECK(std::count(roots.begin(), roots.end(), r0) == 1);
  }
}

TEST_CASE("root recovery on a disconnected graph") {
  auto g = tu::from_edges(4, {{0, 1}, {2, 3}});
  auto p = tu::full_palette(3);
  auto eg = build_exchange_graph(g, p, kDefaultMaxFaces);
  auto roots = root_templates(g, p);
  REQUIRE(roots.size() == 6);
  for (std::size_t v = 0; v < eg.nodes.size(); ++v) {
    auto r = root_of_node(g, eg.nodes[v]);
    CHECK(std::count(roots.begin(), roots.end(), r) == 1);
  }
}

TEST_CASE("equivalence holds for the small catalog") {
  std::vector<Palette (*)(int)> palettes = {tu::full_palette, tu::mono_palette,
                                            tu::mixed_palette};
  for (const auto& g : tu::small_graph_catalog()) {
    if (g.size() < 2) continue;
    for (auto mk : palettes) {
      auto p = mk(static_cast<int>(g.size()) - 1);
      CHECK(equivalence_check(g, p, kDefaultMaxFaces));
    }
  }
}

TEST_CASE("exchange guard throws") {
  CHECK_THROWS_AS(build_exchange_graph(tu::complete_graph(5), tu::full_palette(4), 10),
                  ResourceError);
}
