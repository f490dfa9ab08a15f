#pragma once

#include <utility>
#include <vector>

#include "poset.hpp"

namespace cga {

// A maximal tubing with one palette color per tube.
struct MaxColorTubing {
  Tubing tubing;                // canonical tube order
  std::vector<Color> color_of;  // parallel to tubing
  bool operator==(const MaxColorTubing&) const = default;
};

// Colored tubing fragment: (tube, color) pairs sorted by tube.
using ColoredFragment = std::vector<std::pair<Tube, Color>>;

struct ExchangeGraph {
  Graph graph;
  Palette palette;
  std::vector<MaxColorTubing> nodes;  // canonical order
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Nodes = maximal tubings x distinct color assignments; adjacency = equal
// colored tubings up to one exchanged tube of the same color.
ExchangeGraph build_exchange_graph(const Graph& g, const Palette& p,
                                   std::size_t guard = kDefaultMaxFaces);

// Same colors on the same-size outer tubes. Connected graphs only.
bool color_matched(const Graph& g, const MaxColorTubing& a,
                   const MaxColorTubing& b);

// Connected components of the exchange graph, each sorted, ordered by their
// smallest node.
std::vector<std::vector<int>> exchange_components(const ExchangeGraph& eg);

// Nodes reachable from v along paths whose every node contains the colored
// fragment. The fragment must be part of node v.
std::vector<int> reachable_face(const ExchangeGraph& eg,
                                const ColoredFragment& fragment, int v);

// Poset of reachability faces of one exchange-graph component, ordered by
// node-set containment.
FacePoset build_peg_poset(const ExchangeGraph& eg,
                          const std::vector<int>& component);

// Root template reconstructed from a single maximal color tubing: outer-tube
// colors by descending size per component, component-tube colors as block.
RootTemplate root_of_node(const Graph& g, const MaxColorTubing& node);

// Exchange-graph oracle: components match color classes and root templates,
// and every reachability poset is order-isomorphic to the built component.
bool equivalence_check(const Graph& g, const Palette& p,
                       std::size_t max_faces = kDefaultMaxFaces);

}  // namespace cga
