#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cga {

// Thrown on malformed caller input (bad node ids, invalid tubes, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a construction exceeds its face/node guard.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal structural invariant fails.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node sets are bitmasks over node indices; index i is the i-th label in
// sorted order.
using NodeMask = std::uint32_t;

inline constexpr std::size_t kMaxNodes = 20;

// Simple undirected graph on string node labels.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int index_of(const std::string& label) const;
  NodeMask adjacency(int v) const { return adj_.at(v); }
  bool has_edge(int u, int v) const;
  NodeMask full_mask() const;
  std::vector<std::pair<int, int>> edge_list() const;  // sorted pairs, u < v
  std::size_t edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> labels_;   // sorted, unique
  std::vector<NodeMask> adj_;
};

std::vector<int> mask_nodes(NodeMask m);  // ascending indices
NodeMask labels_to_mask(const Graph& g, const std::vector<std::string>& labels);
std::vector<std::string> mask_labels(const Graph& g, NodeMask m);

// Subgraph induced on s; node labels are kept.
Graph induced_subgraph(const Graph& g, NodeMask s);

// Connectivity of the subgraph induced on s. The empty set is not connected.
bool is_connected_subset(const Graph& g, NodeMask s);
bool is_connected(const Graph& g);

// Node masks of the connected components, ordered by lowest node index.
std::vector<NodeMask> connected_components(const Graph& g);
std::vector<NodeMask> components_within(const Graph& g, NodeMask s);

// Minimum number of node deletions that disconnect g. Single node: 1.
// Complete graph on m nodes: m-1. Disconnected or empty: 0.
int vertex_connectivity(const Graph& g);

// Nodes outside s with at least one neighbor in s.
NodeMask set_neighbors(const Graph& g, NodeMask s);

}  // namespace cga
