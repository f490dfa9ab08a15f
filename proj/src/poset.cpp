#include "poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace cga {

namespace {

struct TemplateLess {
  bool operator()(const ColorTemplate& a, const ColorTemplate& b) const {
    return template_less(a, b);
  }
};

struct TubingLess {
  bool operator()(const Tubing& a, const Tubing& b) const {
    return tubing_less(a, b);
  }
};

std::vector<int> closure(const FacePoset& pos, int x, bool upward) {
  std::vector<char> seen(pos.faces.size(), 0);
  std::vector<int> out;
  std::queue<int> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    out.push_back(v);
    const auto& next = upward ? pos.faces[v].up : pos.faces[v].down;
    for (int w : next) {
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void sort_cover_lists(FacePoset& pos) {
  for (Face& f : pos.faces) {
    std::sort(f.down.begin(), f.down.end());
    std::sort(f.up.begin(), f.up.end());
  }
}

}  // namespace

std::vector<int> FacePoset::ids_at_rank(int r) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].rank == r) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> up_set(const FacePoset& pos, int x) {
  return closure(pos, x, true);
}

std::vector<int> down_set(const FacePoset& pos, int x) {
  return closure(pos, x, false);
}

bool poset_leq(const FacePoset& pos, int x, int y) {
  if (x == y) return true;
  if (pos.faces[x].rank >= pos.faces[y].rank) return false;
  std::vector<char> seen(pos.faces.size(), 0);
  std::queue<int> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : pos.faces[v].up) {
      if (w == y) return true;
      if (!seen[w] && pos.faces[w].rank < pos.faces[y].rank) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return false;
}

FacePoset build_component(const Graph& g, const Palette& p,
                          const RootTemplate& root, std::size_t max_faces) {
  if (!root.tubing.empty()) {
    throw InputError("root template must have an empty tubing");
  }
  return build_below(g, p, root, max_faces);
}

FacePoset build_below(const Graph& g, const Palette& p,
                      const ColorTemplate& root, std::size_t max_faces) {
  if (!validate_template(g, p, root)) {
    throw InputError("template does not fit the graph and palette");
  }
  int n = static_cast<int>(g.size());

  std::map<ColorTemplate, int, TemplateLess> index;
  std::vector<ColorTemplate> tpls;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) in tpl indices
  std::queue<int> frontier;
  index.emplace(root, 0);
  tpls.push_back(root);
  frontier.push(0);
  while (!frontier.empty()) {
    int pi = frontier.front();
    frontier.pop();
    ColorTemplate parent = tpls[pi];
    for (ColorTemplate& child : enumerate_children(g, p, parent)) {
      auto [it, fresh] = index.emplace(child, static_cast<int>(tpls.size()));
      if (fresh) {
        if (tpls.size() + 2 > max_faces) {
          throw ResourceError("face guard exceeded while building component");
        }
        tpls.push_back(std::move(child));
        frontier.push(it->second);
      }
      covers.emplace_back(it->second, pi);
    }
  }

  // Canonical ids: ascending rank, template order within rank; least = 0.
  std::vector<int> order(tpls.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    std::size_t sa = tpls[a].tubing.size(), sb = tpls[b].tubing.size();
    if (sa != sb) return sa > sb;  // more tubes = lower rank
    return template_less(tpls[a], tpls[b]);
  });
  std::vector<int> new_id(tpls.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i) + 1;
  }

  FacePoset pos;
  pos.top_rank = n - 1 - static_cast<int>(root.tubing.size());
  pos.from_templates = true;
  pos.graph = g;
  pos.palette = p;
  pos.root = root;
  pos.faces.resize(tpls.size() + 1);
  pos.faces[0].rank = -1;
  for (std::size_t i = 0; i < tpls.size(); ++i) {
    Face& f = pos.faces[new_id[i]];
    f.rank = n - 1 - static_cast<int>(tpls[i].tubing.size());
    f.has_template = true;
    f.tpl = tpls[i];
  }
  for (auto [lo, hi] : covers) {
    pos.faces[new_id[lo]].up.push_back(new_id[hi]);
    pos.faces[new_id[hi]].down.push_back(new_id[lo]);
  }
  for (int v : pos.ids_at_rank(0)) {
    pos.faces[0].up.push_back(v);
    pos.faces[v].down.push_back(0);
  }
  sort_cover_lists(pos);
  return pos;
}

std::vector<FacePoset> build_collection(const Graph& g, const Palette& p,
                                        std::size_t max_faces) {
  std::vector<FacePoset> out;
  for (const RootTemplate& root : root_templates(g, p)) {
    out.push_back(build_component(g, p, root, max_faces));
  }
  return out;
}

std::vector<std::size_t> f_vector(const FacePoset& pos) {
  std::vector<std::size_t> out(std::max(pos.top_rank + 1, 0), 0);
  for (const Face& f : pos.faces) {
    if (f.rank >= 0) ++out[f.rank];
  }
  return out;
}

Graph one_skeleton(const FacePoset& pos) {
  std::vector<int> verts = pos.ids_at_rank(0);
  std::size_t width =
      std::to_string(verts.empty() ? 0 : verts.size() - 1).size();
  auto name = [&](std::size_t i) {
    std::string digits = std::to_string(i);
    return "v" + std::string(width - digits.size(), '0') + digits;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) labels.push_back(name(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Face& f : pos.faces) {
    if (f.rank != 1) continue;
    if (f.down.size() != 2) {
      throw StructureError("rank-1 face without exactly two vertices");
    }
    auto lo = std::lower_bound(verts.begin(), verts.end(), f.down[0]);
    auto hi = std::lower_bound(verts.begin(), verts.end(), f.down[1]);
    if (lo == verts.end() || *lo != f.down[0] || hi == verts.end() ||
        *hi != f.down[1]) {
      throw StructureError("rank-1 face covering a non-vertex");
    }
    edges.emplace_back(name(lo - verts.begin()), name(hi - verts.begin()));
  }
  return Graph(std::move(labels), edges);
}

FacePoset direct_product(const FacePoset& a, const FacePoset& b) {
  if (a.faces.empty() || b.faces.empty()) {
    throw InputError("direct_product requires bounded posets");
  }
  // Pairs of non-least faces, then a fresh least face.
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 1; x < a.faces.size(); ++x) {
    for (std::size_t y = 1; y < b.faces.size(); ++y) {
      pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  auto rank_of = [&](const std::pair<int, int>& f) {
    return a.faces[f.first].rank + b.faces[f.second].rank;
  };
  std::sort(pairs.begin(), pairs.end(),
            [&](const std::pair<int, int>& u, const std::pair<int, int>& v) {
              int ru = rank_of(u), rv = rank_of(v);
              if (ru != rv) return ru < rv;
              return u < v;
            });
  std::map<std::pair<int, int>, int> id;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    id[pairs[i]] = static_cast<int>(i) + 1;
  }

  FacePoset pos;
  pos.top_rank = a.top_rank + b.top_rank;
  pos.faces.resize(pairs.size() + 1);
  pos.faces[0].rank = -1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Face& f = pos.faces[i + 1];
    f.rank = rank_of(pairs[i]);
    auto [x, y] = pairs[i];
    for (int x2 : a.faces[x].up) {
      f.up.push_back(id.at({x2, y}));
      pos.faces[id.at({x2, y})].down.push_back(static_cast<int>(i) + 1);
    }
    for (int y2 : b.faces[y].up) {
      f.up.push_back(id.at({x, y2}));
      pos.faces[id.at({x, y2})].down.push_back(static_cast<int>(i) + 1);
    }
    if (f.rank == 0) {
      f.down.push_back(0);
      pos.faces[0].up.push_back(static_cast<int>(i) + 1);
    }
  }
  sort_cover_lists(pos);
  return pos;
}

FacePoset direct_product(const std::vector<FacePoset>& factors) {
  if (factors.empty()) return simplex_poset(0);
  FacePoset acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = direct_product(acc, factors[i]);
  }
  return acc;
}

FacePoset classic_kg_poset(const Graph& g, std::size_t max_faces) {
  int n = static_cast<int>(g.size());
  FacePoset pos;
  if (n == 0) {
    pos.faces.resize(1);
    pos.faces[0].rank = -1;
    return pos;
  }
  std::vector<Tubing> tubings = enumerate_all_tubings(g);
  if (tubings.size() + 1 > max_faces) {
    throw ResourceError("face guard exceeded while building classic poset");
  }
  std::sort(tubings.begin(), tubings.end(), [&](const Tubing& a, const Tubing& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return tubing_less(a, b);
  });
  std::map<Tubing, int, TubingLess> id;
  for (std::size_t i = 0; i < tubings.size(); ++i) {
    id[tubings[i]] = static_cast<int>(i) + 1;
  }

  pos.top_rank = n - 1;
  pos.faces.resize(tubings.size() + 1);
  pos.faces[0].rank = -1;
  for (std::size_t i = 0; i < tubings.size(); ++i) {
    Face& f = pos.faces[i + 1];
    f.rank = n - 1 - static_cast<int>(tubings[i].size());
    for (std::size_t k = 0; k < tubings[i].size(); ++k) {
      Tubing parent = tubings[i];
      parent.erase(parent.begin() + k);
      int pid = id.at(parent);
      f.up.push_back(pid);
      pos.faces[pid].down.push_back(static_cast<int>(i) + 1);
    }
    if (f.rank == 0) {
      f.down.push_back(0);
      pos.faces[0].up.push_back(static_cast<int>(i) + 1);
    }
  }
  sort_cover_lists(pos);
  return pos;
}

FacePoset simplex_poset(int i) {
  if (i < 0) throw InputError("simplex dimension must be nonnegative");
  int points = i + 1;
  FacePoset pos;
  pos.top_rank = i;
  pos.faces.resize(std::size_t{1} << points);
  std::vector<NodeMask> subsets;
  for (NodeMask s = 0; s < (NodeMask{1} << points); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](NodeMask a, NodeMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<int> id(std::size_t{1} << points);
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    id[subsets[k]] = static_cast<int>(k);
    pos.faces[k].rank = std::popcount(subsets[k]) - 1;
  }
  for (NodeMask s : subsets) {
    for (int e = 0; e < points; ++e) {
      if (s & (NodeMask{1} << e)) continue;
      NodeMask t = s | (NodeMask{1} << e);
      pos.faces[id[s]].up.push_back(id[t]);
      pos.faces[id[t]].down.push_back(id[s]);
    }
  }
  sort_cover_lists(pos);
  return pos;
}

FacePoset section(const FacePoset& pos, int lo, int hi) {
  if (!poset_leq(pos, lo, hi)) {
    throw InputError("section endpoints are not ordered");
  }
  std::vector<int> ups = up_set(pos, lo);
  std::vector<int> downs = down_set(pos, hi);
  std::vector<int> members;
  std::set_intersection(ups.begin(), ups.end(), downs.begin(), downs.end(),
                        std::back_inserter(members));
  // members is sorted by id, hence by rank (ids ascend with rank).
  std::vector<int> new_id(pos.faces.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    new_id[members[i]] = static_cast<int>(i);
  }
  int base = pos.faces[lo].rank;
  FacePoset out;
  out.top_rank = pos.faces[hi].rank - base - 1;
  out.faces.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Face& src = pos.faces[members[i]];
    Face& dst = out.faces[i];
    dst.rank = src.rank - base - 1;
    dst.has_template = src.has_template;
    dst.tpl = src.tpl;
    for (int w : src.up) {
      if (new_id[w] >= 0) dst.up.push_back(new_id[w]);
    }
    for (int w : src.down) {
      if (new_id[w] >= 0) dst.down.push_back(new_id[w]);
    }
  }
  sort_cover_lists(out);
  return out;
}

}  // namespace cga
