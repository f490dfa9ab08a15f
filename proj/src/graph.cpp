#include "graph.hpp"

#include <algorithm>
#include <bit>

namespace cga {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
  if (labels_.size() > kMaxNodes) {
    throw InputError("node count exceeds supported maximum of " +
                     std::to_string(kMaxNodes));
  }
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i] == labels_[i - 1]) {
      throw InputError("duplicate node label: " + labels_[i]);
    }
  }
  adj_.assign(labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    int u = index_of(a);
    int v = index_of(b);
    if (u == v) throw InputError("self-loop at node: " + a);
    if (has_edge(u, v)) throw InputError("duplicate edge: " + a + "-" + b);
    adj_[u] |= NodeMask{1} << v;
    adj_[v] |= NodeMask{1} << u;
  }
}

int Graph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw InputError("unknown node id: " + label);
  }
  return static_cast<int>(it - labels_.begin());
}

bool Graph::has_edge(int u, int v) const {
  return (adj_.at(u) >> v) & 1u;
}

NodeMask Graph::full_mask() const {
  if (labels_.empty()) return 0;
  return (NodeMask{1} << labels_.size()) - 1;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u) {
    for (int v = u + 1; v < static_cast<int>(size()); ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edge_list().size(); }

std::vector<int> mask_nodes(NodeMask m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

NodeMask labels_to_mask(const Graph& g, const std::vector<std::string>& labels) {
  NodeMask m = 0;
  for (const auto& s : labels) {
    NodeMask bit = NodeMask{1} << g.index_of(s);
    if (m & bit) throw InputError("duplicate node id in set: " + s);
    m |= bit;
  }
  return m;
}

std::vector<std::string> mask_labels(const Graph& g, NodeMask m) {
  std::vector<std::string> out;
  for (int v : mask_nodes(m)) out.push_back(g.label(v));
  return out;
}

Graph induced_subgraph(const Graph& g, NodeMask s) {
  if (s & ~g.full_mask()) throw InputError("node set outside graph");
  std::vector<std::string> labels = mask_labels(g, s);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u : mask_nodes(s)) {
    for (int v : mask_nodes(g.adjacency(u) & s)) {
      if (u < v) edges.emplace_back(g.label(u), g.label(v));
    }
  }
  return Graph(std::move(labels), edges);
}

bool is_connected_subset(const Graph& g, NodeMask s) {
  if (s & ~g.full_mask()) throw InputError("node set outside graph");
  if (!s) return false;
  NodeMask seen = s & (~s + 1);  // lowest bit
  for (;;) {
    NodeMask grow = seen;
    for (int v : mask_nodes(seen)) grow |= g.adjacency(v) & s;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == s;
}

bool is_connected(const Graph& g) {
  return is_connected_subset(g, g.full_mask());
}

std::vector<NodeMask> components_within(const Graph& g, NodeMask s) {
  std::vector<NodeMask> out;
  NodeMask left = s;
  while (left) {
    NodeMask comp = left & (~left + 1);
    for (;;) {
      NodeMask grow = comp;
      for (int v : mask_nodes(comp)) grow |= g.adjacency(v) & s;
      if (grow == comp) break;
      comp = grow;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<NodeMask> connected_components(const Graph& g) {
  return components_within(g, g.full_mask());
}

int vertex_connectivity(const Graph& g) {
  std::size_t n = g.size();
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;
  NodeMask full = g.full_mask();
  // Smallest deleted set whose removal disconnects the rest. Only complete
  // graphs survive every deletion of up to n-2 nodes.
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    for (NodeMask s = 0; s <= full; ++s) {
      if (std::popcount(s) != static_cast<int>(k)) continue;
      NodeMask rest = full & ~s;
      if (components_within(g, rest).size() > 1) return static_cast<int>(k);
    }
  }
  return static_cast<int>(n) - 1;
}

NodeMask set_neighbors(const Graph& g, NodeMask s) {
  NodeMask out = 0;
  for (int v : mask_nodes(s)) out |= g.adjacency(v);
  return out & ~s;
}

}  // namespace cga
