#include "tubing.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace cga {

bool tube_less(Tube a, Tube b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Equal sizes: the sorted node sequences first differ at the lowest
  // differing index, which belongs to the lexicographically smaller set.
  NodeMask low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

bool tubing_less(const Tubing& a, const Tubing& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      tube_less);
}

bool is_valid_tube(const Graph& g, Tube t) {
  if (t & ~g.full_mask()) throw InputError("tube outside graph");
  if (!t || t == g.full_mask()) return false;
  return is_connected_subset(g, t);
}

bool tubes_compatible(const Graph& g, Tube a, Tube b) {
  if (!is_valid_tube(g, a) || !is_valid_tube(g, b)) {
    throw InputError("tubes_compatible requires valid tubes");
  }
  if (a == b) return false;
  NodeMask inter = a & b;
  if (inter == a || inter == b) return true;  // properly nested
  if (inter) return false;
  return (set_neighbors(g, a) & b) == 0;
}

std::vector<Tube> enumerate_tubes(const Graph& g) {
  std::vector<Tube> out;
  NodeMask full = g.full_mask();
  for (NodeMask s = 1; s < full; ++s) {
    if (is_connected_subset(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

namespace {

bool contains_all_component_tubes(const Graph& g, const Tubing& tubing) {
  std::vector<NodeMask> comps = connected_components(g);
  if (comps.size() < 2) return false;
  for (NodeMask c : comps) {
    if (std::find(tubing.begin(), tubing.end(), c) == tubing.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid_tubing(const Graph& g, const Tubing& tubing) {
  for (std::size_t i = 0; i < tubing.size(); ++i) {
    if (!is_valid_tube(g, tubing[i])) return false;
    for (std::size_t j = i + 1; j < tubing.size(); ++j) {
      if (tubing[i] == tubing[j]) return false;
      if (!tubes_compatible(g, tubing[i], tubing[j])) return false;
    }
  }
  return !contains_all_component_tubes(g, tubing);
}

namespace {

void extend_tubings(const Graph& g, const std::vector<Tube>& tubes,
                    std::size_t start, Tubing& acc, std::size_t target,
                    bool all_sizes, std::vector<Tubing>& out) {
  if (all_sizes || acc.size() == target) {
    if (!contains_all_component_tubes(g, acc)) {
      Tubing sorted = acc;
      std::sort(sorted.begin(), sorted.end(), tube_less);
      out.push_back(std::move(sorted));
    }
    if (!all_sizes) return;
  }
  if (acc.size() == target) return;
  for (std::size_t i = start; i < tubes.size(); ++i) {
    bool ok = true;
    for (Tube t : acc) {
      if (!tubes_compatible(g, tubes[i], t)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    acc.push_back(tubes[i]);
    extend_tubings(g, tubes, i + 1, acc, target, all_sizes, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Tubing> enumerate_all_tubings(const Graph& g) {
  std::vector<Tube> tubes = enumerate_tubes(g);
  std::vector<Tubing> out;
  Tubing acc;
  std::size_t n = g.size();
  extend_tubings(g, tubes, 0, acc, n ? n - 1 : 0, true, out);
  std::sort(out.begin(), out.end(), tubing_less);
  return out;
}

std::vector<Tubing> enumerate_maximal_tubings(const Graph& g) {
  std::vector<Tube> tubes = enumerate_tubes(g);
  std::vector<Tubing> out;
  Tubing acc;
  std::size_t n = g.size();
  extend_tubings(g, tubes, 0, acc, n ? n - 1 : 0, false, out);
  std::sort(out.begin(), out.end(), tubing_less);
  return out;
}

TubeKind classify_tube(const Graph& g, Tube t) {
  if (!is_connected(g)) {
    throw InputError("classify_tube requires a connected graph");
  }
  if (!is_valid_tube(g, t)) throw InputError("classify_tube requires a tube");
  int slack = static_cast<int>(g.size()) - vertex_connectivity(g);
  return std::popcount(t) <= slack ? TubeKind::kInner : TubeKind::kOuter;
}

CoreGraph core_graph(const Graph& g, const Tubing& tubing, NodeMask owner) {
  if (!is_valid_tubing(g, tubing)) throw InputError("invalid tubing");
  bool is_member = std::find(tubing.begin(), tubing.end(), owner) != tubing.end();
  bool universal = false;
  if (!is_member) {
    std::vector<NodeMask> comps = connected_components(g);
    if (std::find(comps.begin(), comps.end(), owner) == comps.end()) {
      throw InputError("core owner must be a tube of the tubing or a universal sentinel");
    }
    universal = true;
  }

  std::vector<Tube> nested;
  NodeMask covered = 0;
  for (Tube t : tubing) {
    if (t != owner && (t & owner) == t) {
      nested.push_back(t);
      covered |= t;
    }
  }
  NodeMask core = owner & ~covered;

  std::vector<std::string> labels = mask_labels(g, core);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> nodes = mask_nodes(core);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      int u = nodes[i], v = nodes[j];
      bool adjacent = g.has_edge(u, v);
      if (!adjacent) {
        // Joined through a path whose interior sits in one nested tube.
        for (Tube t : nested) {
          if ((g.adjacency(u) & t) && (g.adjacency(v) & t)) {
            adjacent = true;
            break;
          }
        }
      }
      if (adjacent) edges.emplace_back(g.label(u), g.label(v));
    }
  }

  CoreGraph out;
  out.graph = Graph(std::move(labels), edges);
  out.owner = owner;
  out.core_nodes = core;
  out.universal = universal;
  return out;
}

bool core_tube_bijection_check(const Graph& g, const Tubing& tubing, Tube t) {
  CoreGraph core = core_graph(g, tubing, t);

  // Left side: tubes of the core graph, as ambient node masks.
  std::vector<NodeMask> core_tubes;
  for (Tube ct : enumerate_tubes(core.graph)) {
    core_tubes.push_back(labels_to_mask(g, mask_labels(core.graph, ct)));
  }
  std::sort(core_tubes.begin(), core_tubes.end());

  // Right side: tubes of g compatible with the tubing, properly inside t,
  // and not inside any tube nested in t.
  std::vector<NodeMask> ambient_side;
  for (Tube h : enumerate_tubes(g)) {
    if ((h & t) != h || h == t) continue;
    bool inside_nested = false;
    for (Tube s : tubing) {
      if (s != t && (s & t) == s && (h & s) == h) {
        inside_nested = true;
        break;
      }
    }
    if (inside_nested) continue;
    bool compatible = true;
    for (Tube s : tubing) {
      if (s == h || !tubes_compatible(g, h, s)) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    ambient_side.push_back(h & core.core_nodes);
  }
  std::sort(ambient_side.begin(), ambient_side.end());

  // The restriction map h -> h intersect core must biject onto core tubes.
  if (std::adjacent_find(ambient_side.begin(), ambient_side.end()) !=
      ambient_side.end()) {
    return false;
  }
  return ambient_side == core_tubes;
}

}  // namespace cga
