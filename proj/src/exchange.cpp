#include "exchange.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "verify.hpp"

namespace cga {

namespace {

bool node_less(const MaxColorTubing& a, const MaxColorTubing& b) {
  if (a.tubing != b.tubing) return tubing_less(a.tubing, b.tubing);
  return a.color_of < b.color_of;
}

ColoredFragment colored_tubes(const MaxColorTubing& n) {
  ColoredFragment out;
  for (std::size_t i = 0; i < n.tubing.size(); ++i) {
    out.emplace_back(n.tubing[i], n.color_of[i]);
  }
  return out;
}

bool contains_fragment(const MaxColorTubing& n, const ColoredFragment& frag) {
  for (const auto& [t, c] : frag) {
    auto it = std::lower_bound(n.tubing.begin(), n.tubing.end(), t, tube_less);
    if (it == n.tubing.end() || *it != t) return false;
    if (n.color_of[it - n.tubing.begin()] != c) return false;
  }
  return true;
}

}  // namespace

ExchangeGraph build_exchange_graph(const Graph& g, const Palette& p,
                                   std::size_t guard) {
  if (p.size() + 1 != g.size()) {
    throw InputError("palette must have one color per node but one");
  }
  ExchangeGraph eg;
  eg.graph = g;
  eg.palette = p;
  std::vector<Tubing> maximal = enumerate_maximal_tubings(g);
  std::vector<std::vector<Color>> assignments =
      distinct_arrangements(p.colors, static_cast<int>(p.size()));
  if (maximal.size() * assignments.size() > guard) {
    throw ResourceError("exchange graph guard exceeded");
  }
  for (const Tubing& t : maximal) {
    for (const auto& colors : assignments) {
      eg.nodes.push_back({t, colors});
    }
  }
  std::sort(eg.nodes.begin(), eg.nodes.end(), node_less);

  eg.adj.resize(eg.nodes.size());
  std::vector<ColoredFragment> pairs(eg.nodes.size());
  for (std::size_t i = 0; i < eg.nodes.size(); ++i) {
    pairs[i] = colored_tubes(eg.nodes[i]);
  }
  for (std::size_t i = 0; i < eg.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < eg.nodes.size(); ++j) {
      // Adjacent when the colored tube sets differ in exactly one entry on
      // each side and the exchanged tubes carry the same color.
      const ColoredFragment& a = pairs[i];
      const ColoredFragment& b = pairs[j];
      std::vector<std::pair<Tube, Color>> only_a, only_b;
      std::size_t x = 0, y = 0;
      while (x < a.size() || y < b.size()) {
        if (y == b.size() ||
            (x < a.size() && tube_less(a[x].first, b[y].first))) {
          only_a.push_back(a[x++]);
        } else if (x == a.size() || tube_less(b[y].first, a[x].first)) {
          only_b.push_back(b[y++]);
        } else {
          if (a[x].second != b[y].second) {
            only_a.push_back(a[x]);
            only_b.push_back(b[y]);
          }
          ++x;
          ++y;
        }
      }
      if (only_a.size() == 1 && only_b.size() == 1 &&
          only_a[0].first != only_b[0].first &&
          only_a[0].second == only_b[0].second) {
        eg.adj[i].push_back(static_cast<int>(j));
        eg.adj[j].push_back(static_cast<int>(i));
        eg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return eg;
}

bool color_matched(const Graph& g, const MaxColorTubing& a,
                   const MaxColorTubing& b) {
  if (!is_connected(g)) {
    throw InputError("color matching is defined for connected graphs");
  }
  int n = static_cast<int>(g.size());
  int kappa = vertex_connectivity(g);
  for (int size = n - kappa + 1; size < n; ++size) {
    Color ca, cb;
    bool fa = false, fb = false;
    for (std::size_t i = 0; i < a.tubing.size(); ++i) {
      if (std::popcount(a.tubing[i]) == size) {
        if (fa) throw StructureError("duplicate outer tube size");
        ca = a.color_of[i];
        fa = true;
      }
    }
    for (std::size_t i = 0; i < b.tubing.size(); ++i) {
      if (std::popcount(b.tubing[i]) == size) {
        if (fb) throw StructureError("duplicate outer tube size");
        cb = b.color_of[i];
        fb = true;
      }
    }
    if (!fa || !fb) throw StructureError("missing outer tube size");
    if (ca != cb) return false;
  }
  return true;
}

std::vector<std::vector<int>> exchange_components(const ExchangeGraph& eg) {
  std::vector<char> seen(eg.nodes.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < eg.nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : eg.adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> reachable_face(const ExchangeGraph& eg,
                                const ColoredFragment& fragment, int v) {
  if (v < 0 || v >= static_cast<int>(eg.nodes.size()) ||
      !contains_fragment(eg.nodes[v], fragment)) {
    throw InputError("start node does not contain the fragment");
  }
  std::vector<char> seen(eg.nodes.size(), 0);
  std::vector<int> out;
  std::queue<int> q;
  q.push(v);
  seen[v] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    out.push_back(x);
    for (int w : eg.adj[x]) {
      if (!seen[w] && contains_fragment(eg.nodes[w], fragment)) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FacePoset build_peg_poset(const ExchangeGraph& eg,
                          const std::vector<int>& component) {
  int n = static_cast<int>(eg.graph.size());
  std::vector<char> in_comp(eg.nodes.size(), 0);
  for (int v : component) in_comp[v] = 1;

  // Bucket the component's nodes by every fragment of their tubings; the
  // faces for a fragment are the connected pieces of its bucket.
  std::map<ColoredFragment, std::vector<int>> buckets;
  for (int v : component) {
    ColoredFragment all = colored_tubes(eg.nodes[v]);
    std::size_t k = all.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      ColoredFragment frag;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) frag.push_back(all[i]);
      }
      buckets[frag].push_back(v);
    }
  }

  std::map<std::vector<int>, int> face_rank;  // node set -> rank
  for (const auto& [frag, bucket] : buckets) {
    int rank = n - 1 - static_cast<int>(frag.size());
    std::set<int> left(bucket.begin(), bucket.end());
    while (!left.empty()) {
      std::vector<int> piece;
      std::queue<int> q;
      int s = *left.begin();
      left.erase(left.begin());
      q.push(s);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        piece.push_back(v);
        for (int w : eg.adj[v]) {
          auto it = left.find(w);
          if (it != left.end()) {
            left.erase(it);
            q.push(w);
          }
        }
      }
      std::sort(piece.begin(), piece.end());
      auto [it, fresh] = face_rank.emplace(std::move(piece), rank);
      if (!fresh && it->second != rank) {
        throw StructureError("node set reached at two different ranks");
      }
    }
  }

  std::vector<std::pair<std::vector<int>, int>> faces(face_rank.begin(),
                                                      face_rank.end());
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  FacePoset pos;
  pos.top_rank = n - 1;
  pos.faces.resize(faces.size() + 1);
  pos.faces[0].rank = -1;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    pos.faces[i + 1].rank = faces[i].second;
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].second == 0) {
      pos.faces[i + 1].down.push_back(0);
      pos.faces[0].up.push_back(static_cast<int>(i) + 1);
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (faces[j].second != faces[i].second - 1) continue;
      if (std::includes(faces[i].first.begin(), faces[i].first.end(),
                        faces[j].first.begin(), faces[j].first.end())) {
        pos.faces[i + 1].down.push_back(static_cast<int>(j) + 1);
        pos.faces[j + 1].up.push_back(static_cast<int>(i) + 1);
      }
    }
  }
  for (Face& f : pos.faces) {
    std::sort(f.down.begin(), f.down.end());
    std::sort(f.up.begin(), f.up.end());
  }
  return pos;
}

RootTemplate root_of_node(const Graph& g, const MaxColorTubing& node) {
  RootTemplate root;
  for (NodeMask comp : connected_components(g)) {
    Graph cg = induced_subgraph(g, comp);
    int ni = static_cast<int>(cg.size());
    int kappa = vertex_connectivity(cg);
    std::vector<std::pair<int, Color>> outer;  // (size, color)
    std::vector<Color> inner;
    for (std::size_t i = 0; i < node.tubing.size(); ++i) {
      Tube t = node.tubing[i];
      if ((t & comp) != t || t == comp) continue;
      int size = std::popcount(t);
      if (size > ni - kappa) {
        outer.emplace_back(size, node.color_of[i]);
      } else {
        inner.push_back(node.color_of[i]);
      }
    }
    std::sort(outer.begin(), outer.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < outer.size(); ++i) {
      if (outer[i].first == outer[i - 1].first) {
        throw StructureError("duplicate outer tube size");
      }
    }
    ColorWord w;
    for (const auto& [size, color] : outer) w.chain.push_back(color);
    std::sort(inner.begin(), inner.end());
    w.inner = std::move(inner);
    root.sentinel_words.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < node.tubing.size(); ++i) {
    if (is_connected_subset(g, node.tubing[i]) &&
        set_neighbors(g, node.tubing[i]) == 0) {
      root.universal_block.push_back(node.color_of[i]);
    }
  }
  std::sort(root.universal_block.begin(), root.universal_block.end());
  return root;
}

bool equivalence_check(const Graph& g, const Palette& p,
                       std::size_t max_faces) {
  ExchangeGraph eg = build_exchange_graph(g, p, max_faces);
  std::vector<std::vector<int>> comps = exchange_components(eg);

  if (is_connected(g) && !eg.nodes.empty()) {
    // Components must be exactly the color-matched classes.
    std::map<int, int> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    for (std::size_t i = 0; i < eg.nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < eg.nodes.size(); ++j) {
        bool matched = color_matched(g, eg.nodes[i], eg.nodes[j]);
        bool together = comp_of[static_cast<int>(i)] ==
                        comp_of[static_cast<int>(j)];
        if (matched != together) return false;
      }
    }
  }

  std::vector<RootTemplate> roots = root_templates(g, p);
  if (comps.size() != roots.size()) return false;

  std::set<std::size_t> used;
  for (const std::vector<int>& comp : comps) {
    RootTemplate want = root_of_node(g, eg.nodes[comp[0]]);
    for (int v : comp) {
      if (!(root_of_node(g, eg.nodes[v]) == want)) return false;
    }
    std::size_t idx = roots.size();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (roots[r] == want) {
        idx = r;
        break;
      }
    }
    if (idx == roots.size() || !used.insert(idx).second) return false;
    FacePoset peg = build_peg_poset(eg, comp);
    FacePoset tpl = build_component(g, p, roots[idx], max_faces);
    if (!poset_isomorphic(peg, tpl)) return false;
  }
  return true;
}

}  // namespace cga
