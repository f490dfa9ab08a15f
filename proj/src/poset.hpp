#pragma once

#include <cstddef>
#include <vector>

#include "coloring.hpp"

namespace cga {

inline constexpr std::size_t kDefaultMaxFaces = 1000000;

// One face of a graded bounded poset. Face 0 is always the formal least face
// at rank -1. Template-built posets carry the color template of each proper
// face; derived posets (products, sections, simplices) do not.
struct Face {
  int rank = 0;
  bool has_template = false;
  ColorTemplate tpl;
  std::vector<int> down;  // ids of faces this one covers (rank-1)
  std::vector<int> up;    // ids of faces covering this one (rank+1)
};

struct FacePoset {
  std::vector<Face> faces;  // ids ascending by rank; id 0 = least face
  int top_rank = -1;

  // Ambient data, present when built from templates.
  bool from_templates = false;
  Graph graph;
  Palette palette;
  RootTemplate root;

  std::size_t size() const { return faces.size(); }
  int greatest() const { return static_cast<int>(faces.size()) - 1; }
  std::vector<int> ids_at_rank(int r) const;
};

// All ids y with x <= y (resp. y <= x) in the cover-relation order,
// including x itself.
std::vector<int> up_set(const FacePoset& pos, int x);
std::vector<int> down_set(const FacePoset& pos, int x);
bool poset_leq(const FacePoset& pos, int x, int y);

// Closure of enumerate_children from the root, with the formal least face
// appended under the maximal templates. Face ids are canonical: ascending
// rank, template order within rank.
FacePoset build_component(const Graph& g, const Palette& p,
                          const RootTemplate& root,
                          std::size_t max_faces = kDefaultMaxFaces);

// Same closure from an arbitrary face: the interval from the least face up
// to `top`, as a poset in its own right. Ranks keep their ambient values.
FacePoset build_below(const Graph& g, const Palette& p,
                      const ColorTemplate& top,
                      std::size_t max_faces = kDefaultMaxFaces);

// One poset per root template, in canonical root order.
std::vector<FacePoset> build_collection(const Graph& g, const Palette& p,
                                        std::size_t max_faces = kDefaultMaxFaces);

// Face counts by rank 0..top_rank (least face excluded).
std::vector<std::size_t> f_vector(const FacePoset& pos);

// Graph on the rank-0 faces; one edge per rank-1 face.
Graph one_skeleton(const FacePoset& pos);

// Face poset of the direct product: pairs of non-least faces plus a new
// least face, rank(x,y) = rank(x) + rank(y), covers componentwise.
FacePoset direct_product(const FacePoset& a, const FacePoset& b);
FacePoset direct_product(const std::vector<FacePoset>& factors);

// Classic (uncolored) graph associahedron: all tubings ordered by reverse
// inclusion. Disconnected graphs use the component-tube restriction.
FacePoset classic_kg_poset(const Graph& g, std::size_t max_faces = kDefaultMaxFaces);

// Boolean-lattice face poset of the i-simplex.
FacePoset simplex_poset(int i);

// The section [lo, hi] as a poset in its own right: faces x with
// lo <= x <= hi, with lo re-ranked to -1.
FacePoset section(const FacePoset& pos, int lo, int hi);

}  // namespace cga
