#pragma once

#include "graph.hpp"

namespace cga {

// A tube is a nonempty proper node set whose induced subgraph is connected.
using Tube = NodeMask;

// Pairwise compatible tubes, kept in canonical order (tube_less).
using Tubing = std::vector<Tube>;

// Canonical tube order: by size, then by sorted node sequence.
bool tube_less(Tube a, Tube b);
bool tubing_less(const Tubing& a, const Tubing& b);

bool is_valid_tube(const Graph& g, Tube t);

// Compatible: properly nested, or disjoint with no edge between them.
bool tubes_compatible(const Graph& g, Tube a, Tube b);

std::vector<Tube> enumerate_tubes(const Graph& g);

// Valid tubing: valid tubes, no duplicates, pairwise compatible, and (for a
// disconnected graph with m components) not all m component tubes at once.
bool is_valid_tubing(const Graph& g, const Tubing& tubing);

std::vector<Tubing> enumerate_all_tubings(const Graph& g);

// Tubings with n-1 tubes.
std::vector<Tubing> enumerate_maximal_tubings(const Graph& g);

enum class TubeKind { kInner, kOuter };

// Inner when |t| <= n - connectivity(g). Requires g connected.
TubeKind classify_tube(const Graph& g, Tube t);

// The core of a tube t in a tubing: the nodes of t inside no nested tube,
// with an edge joining two core nodes when they are adjacent in g or both
// have a neighbor in a single nested tube. The universal sentinel (the whole
// graph, or a whole component of a disconnected graph) gets a core the same
// way, nesting every tube it contains.
struct CoreGraph {
  Graph graph;              // node labels are the ambient labels of the core
  NodeMask owner = 0;       // the tube or sentinel this core belongs to
  NodeMask core_nodes = 0;  // ambient mask of the core nodes
  bool universal = false;
};

CoreGraph core_graph(const Graph& g, const Tubing& tubing, NodeMask owner);

// Tubes of the core of t correspond one to one with tubes of g that are
// compatible with the tubing, properly inside t, and inside no tube nested
// in t. Checks that correspondence by explicit enumeration of both sides.
bool core_tube_bijection_check(const Graph& g, const Tubing& tubing, Tube t);

}  // namespace cga
