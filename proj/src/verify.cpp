#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace cga {

namespace {

void add_witness(std::vector<std::string>* sink, const std::string& s) {
  if (sink) sink->push_back(s);
}

std::string face_ref(const FacePoset& pos, int id) {
  std::ostringstream os;
  os << "face " << id << " (rank " << pos.faces[id].rank << ")";
  return os.str();
}

// All maximal chains from `top` down to `bottom` through `member` faces,
// reported bottom-up.
void collect_chains(const FacePoset& pos, int bottom, int top,
                    const std::vector<char>& member,
                    std::vector<std::vector<int>>& out) {
  std::vector<int> path{top};
  std::function<void(int)> dive = [&](int c) {
    if (c == bottom) {
      out.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (int d : pos.faces[c].down) {
      if (!member[d]) continue;
      path.push_back(d);
      dive(d);
      path.pop_back();
    }
  };
  dive(top);
}

// Indices of chains adjacent to `chain` at interior position i: same chain
// with the element at i exchanged.
void interior_alternatives(const FacePoset& pos, const std::vector<int>& chain,
                           std::size_t i, const std::vector<char>& member,
                           std::vector<int>& alts) {
  alts.clear();
  int below = chain[i - 1];
  int above = chain[i + 1];
  for (int m : pos.faces[above].down) {
    if (m == chain[i] || !member[m]) continue;
    const auto& dn = pos.faces[m].down;
    if (std::binary_search(dn.begin(), dn.end(), below)) alts.push_back(m);
  }
}

bool section_flags_connected(const FacePoset& pos, int bottom, int top,
                             const std::vector<char>& member,
                             std::size_t* total, std::size_t* reached) {
  std::vector<std::vector<int>> chains;
  collect_chains(pos, bottom, top, member, chains);
  *total = chains.size();
  *reached = 0;
  if (chains.empty()) return false;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    index[chains[i]] = static_cast<int>(i);
  }
  std::vector<char> seen(chains.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 0;
  std::vector<int> alts;
  while (!q.empty()) {
    int ci = q.front();
    q.pop();
    ++count;
    std::vector<int> chain = chains[ci];
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
      interior_alternatives(pos, chain, i, member, alts);
      for (int m : alts) {
        int old = chain[i];
        chain[i] = m;
        auto it = index.find(chain);
        chain[i] = old;
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = 1;
          q.push(it->second);
        }
      }
    }
  }
  *reached = count;
  return count == chains.size();
}

}  // namespace

bool check_bounded(const FacePoset& pos, std::vector<std::string>* witnesses) {
  if (pos.faces.empty()) {
    add_witness(witnesses, "bounded: poset has no faces");
    return false;
  }
  bool ok = true;
  std::size_t least_count = 0, top_count = 0;
  for (const Face& f : pos.faces) {
    if (f.rank == -1) ++least_count;
    if (f.rank == pos.top_rank) ++top_count;
  }
  if (least_count != 1 || pos.faces[0].rank != -1) {
    add_witness(witnesses, "bounded: least face missing or duplicated");
    ok = false;
  }
  if (top_count != 1) {
    add_witness(witnesses, "bounded: greatest face missing or duplicated");
    ok = false;
  }
  if (ok) {
    if (up_set(pos, 0).size() != pos.size()) {
      add_witness(witnesses, "bounded: least face is not below every face");
      ok = false;
    }
    if (down_set(pos, pos.greatest()).size() != pos.size()) {
      add_witness(witnesses, "bounded: greatest face is not above every face");
      ok = false;
    }
  }
  return ok;
}

bool check_flag_length(const FacePoset& pos,
                       std::vector<std::string>* witnesses) {
  bool ok = true;
  for (std::size_t i = 0; i < pos.faces.size(); ++i) {
    const Face& f = pos.faces[i];
    for (int d : f.down) {
      if (f.rank - pos.faces[d].rank != 1) {
        add_witness(witnesses, "flag length: cover " + face_ref(pos, d) +
                                   " < " + face_ref(pos, static_cast<int>(i)) +
                                   " skips a rank");
        ok = false;
      }
    }
    if (f.rank > -1 && f.down.empty()) {
      add_witness(witnesses, "flag length: " + face_ref(pos, static_cast<int>(i)) +
                                 " covers nothing");
      ok = false;
    }
    if (f.rank < pos.top_rank && f.up.empty()) {
      add_witness(witnesses, "flag length: " + face_ref(pos, static_cast<int>(i)) +
                                 " is covered by nothing");
      ok = false;
    }
  }
  return ok;
}

bool check_diamond(const FacePoset& pos, std::vector<std::string>* witnesses) {
  bool ok = true;
  for (std::size_t h = 0; h < pos.faces.size(); ++h) {
    std::map<int, int> middles;
    for (int m : pos.faces[h].down) {
      for (int f : pos.faces[m].down) ++middles[f];
    }
    for (auto [f, count] : middles) {
      if (count != 2) {
        std::ostringstream os;
        os << "diamond: " << face_ref(pos, f) << " < "
           << face_ref(pos, static_cast<int>(h)) << " has " << count
           << " middle faces";
        add_witness(witnesses, os.str());
        ok = false;
      }
    }
  }
  return ok;
}

bool check_strong_flag_connectivity(const FacePoset& pos,
                                    std::vector<std::string>* witnesses) {
  bool ok = true;
  std::size_t n = pos.faces.size();
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<int> ups = up_set(pos, static_cast<int>(f));
    std::vector<char> above(n, 0);
    for (int u : ups) above[u] = 1;
    for (int h : ups) {
      // Sections spanning fewer than 3 ranks are trivially flag-connected.
      if (pos.faces[h].rank - pos.faces[f].rank < 3) continue;
      std::vector<int> downs = down_set(pos, h);
      std::vector<char> member(n, 0);
      for (int d : downs) {
        if (above[d]) member[d] = 1;
      }
      std::size_t total = 0, reached = 0;
      if (!section_flags_connected(pos, static_cast<int>(f), h, member, &total,
                                   &reached)) {
        std::ostringstream os;
        os << "flag connectivity: section [" << f << ", " << h << "] reaches "
           << reached << " of " << total << " flags";
        add_witness(witnesses, os.str());
        ok = false;
      }
    }
  }
  return ok;
}

bool check_simple(const FacePoset& pos, std::vector<std::string>* witnesses) {
  if (pos.top_rank < 1) return true;
  FacePoset boolean = simplex_poset(pos.top_rank - 1);
  bool ok = true;
  for (int v : pos.ids_at_rank(0)) {
    if (!poset_leq(pos, v, pos.greatest())) {
      add_witness(witnesses,
                  "simple: " + face_ref(pos, v) + " not below the greatest face");
      ok = false;
      continue;
    }
    FacePoset figure = section(pos, v, pos.greatest());
    if (!poset_isomorphic(figure, boolean)) {
      add_witness(witnesses, "simple: vertex figure at " + face_ref(pos, v) +
                                 " is not a Boolean lattice");
      ok = false;
    }
  }
  return ok;
}

AxiomReport is_abstract_polytope(const FacePoset& pos) {
  AxiomReport r;
  r.bounded = check_bounded(pos, &r.witnesses);
  r.flag_length_ok = check_flag_length(pos, &r.witnesses);
  r.diamond_ok = check_diamond(pos, &r.witnesses);
  r.strongly_flag_connected = check_strong_flag_connectivity(pos, &r.witnesses);
  r.simple = check_simple(pos, &r.witnesses);
  return r;
}

SurfaceReport surface_report(const FacePoset& pos) {
  if (pos.top_rank != 3) {
    throw InputError("surface report requires a rank-3 poset");
  }
  SurfaceReport r;
  std::vector<int> verts = pos.ids_at_rank(0);
  std::vector<int> edges = pos.ids_at_rank(1);
  std::vector<int> facets = pos.ids_at_rank(2);
  r.vertices = verts.size();
  r.edges = edges.size();
  r.facets = facets.size();
  for (int f : facets) ++r.census[pos.faces[f].down.size()];
  r.euler = static_cast<long long>(r.vertices) -
            static_cast<long long>(r.edges) + static_cast<long long>(r.facets);

  r.pseudomanifold_ok = true;
  for (int e : edges) {
    if (pos.faces[e].up.size() != 2 || pos.faces[e].down.size() != 2) {
      r.pseudomanifold_ok = false;
    }
  }

  // Corner edges of each facet at each of its vertices.
  std::map<std::pair<int, int>, std::vector<int>> corner;  // (facet, vertex)
  for (int f : facets) {
    for (int e : pos.faces[f].down) {
      for (int v : pos.faces[e].down) corner[{f, v}].push_back(e);
    }
  }
  for (auto& [key, list] : corner) {
    if (list.size() != 2) r.pseudomanifold_ok = false;
  }

  // Vertex links must be single cycles.
  if (r.pseudomanifold_ok) {
    for (int v : verts) {
      const std::vector<int>& ev = pos.faces[v].up;
      std::map<int, std::vector<int>> link;  // edge -> adjacent edges at v
      for (const auto& [key, list] : corner) {
        if (key.second != v) continue;
        link[list[0]].push_back(list[1]);
        link[list[1]].push_back(list[0]);
      }
      if (link.size() != ev.size()) {
        r.pseudomanifold_ok = false;
        break;
      }
      for (const auto& [e, nbrs] : link) {
        if (nbrs.size() != 2) r.pseudomanifold_ok = false;
      }
      if (!r.pseudomanifold_ok) break;
      // Connectivity of the link.
      std::set<int> seen;
      std::queue<int> q;
      q.push(ev[0]);
      seen.insert(ev[0]);
      while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (int w : link[e]) {
          if (seen.insert(w).second) q.push(w);
        }
      }
      if (seen.size() != ev.size()) {
        r.pseudomanifold_ok = false;
        break;
      }
    }
  }

  // Orientability: walk each facet boundary, then two-color traversal
  // directions across shared edges.
  bool orientable = r.pseudomanifold_ok;
  bool connected = true;
  if (r.pseudomanifold_ok && !facets.empty()) {
    // facet -> directed boundary: edge -> (from vertex, to vertex)
    std::map<int, std::map<int, std::pair<int, int>>> boundary;
    for (int f : facets) {
      const std::vector<int>& fe = pos.faces[f].down;
      int e0 = fe[0];
      int from = pos.faces[e0].down[0];
      int to = pos.faces[e0].down[1];
      std::map<int, std::pair<int, int>> walk;
      int e = e0;
      std::size_t steps = 0;
      while (steps < fe.size()) {
        walk[e] = {from, to};
        ++steps;
        // Next corner edge at `to`.
        const auto& pair = corner.at({f, to});
        int next = pair[0] == e ? pair[1] : pair[0];
        const auto& dn = pos.faces[next].down;
        int nfrom = to;
        int nto = dn[0] == to ? dn[1] : dn[0];
        e = next;
        from = nfrom;
        to = nto;
        if (e == e0) break;
      }
      if (walk.size() != fe.size() || e != e0) {
        r.pseudomanifold_ok = false;
        orientable = false;
        break;
      }
      boundary[f] = std::move(walk);
    }
    if (orientable) {
      std::map<int, int> sign;  // facet -> +1 / -1
      std::size_t colored = 0;
      std::queue<int> q;
      sign[facets[0]] = 1;
      q.push(facets[0]);
      ++colored;
      while (!q.empty() && orientable) {
        int f = q.front();
        q.pop();
        for (const auto& [e, dir] : boundary[f]) {
          for (int f2 : pos.faces[e].up) {
            if (f2 == f) continue;
            auto d1 = dir;
            if (sign[f] < 0) std::swap(d1.first, d1.second);
            auto d2 = boundary[f2].at(e);
            int want = (d2.first == d1.second && d2.second == d1.first) ? 1 : -1;
            auto it = sign.find(f2);
            if (it == sign.end()) {
              sign[f2] = want;
              q.push(f2);
              ++colored;
            } else if (it->second != want) {
              orientable = false;
            }
          }
        }
      }
      connected = colored == facets.size();
    }
  }

  if (r.pseudomanifold_ok && orientable && connected && (2 - r.euler) % 2 == 0) {
    r.genus = (2 - r.euler) / 2;
  }
  return r;
}

bool poset_isomorphic(const FacePoset& a, const FacePoset& b,
                      std::size_t guard) {
  if (a.size() != b.size() || a.top_rank != b.top_rank) return false;
  if (f_vector(a) != f_vector(b)) return false;
  std::size_t n = a.size();
  std::size_t budget = guard;  // refinement sweeps across all branches

  // One joint refinement sweep: recolor by (color, down colors, up colors).
  // Returns false when the color histograms of a and b diverge.
  auto sweep = [&](std::vector<int>& ca, std::vector<int>& cb,
                   std::size_t& classes) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    auto signature = [](const FacePoset& p, const std::vector<int>& col,
                        std::size_t i) {
      std::vector<int> dn, up;
      for (int d : p.faces[i].down) dn.push_back(col[d]);
      for (int u : p.faces[i].up) up.push_back(col[u]);
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      return Sig{col[i], std::move(dn), std::move(up)};
    };
    std::map<Sig, int> fresh;
    std::vector<int> na(n), nb(n);
    for (std::size_t i = 0; i < n; ++i) {
      na[i] = fresh.emplace(signature(a, ca, i), static_cast<int>(fresh.size()))
                  .first->second;
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto it = fresh.find(signature(b, cb, i));
      if (it == fresh.end()) return false;
      nb[i] = it->second;
    }
    std::vector<std::size_t> ha(fresh.size(), 0), hb(fresh.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++ha[na[i]];
      ++hb[nb[i]];
    }
    if (ha != hb) return false;
    ca.swap(na);
    cb.swap(nb);
    classes = fresh.size();
    return true;
  };

  // Individualization-refinement: refine to a stable partition, then pin one
  // face of the smallest ambiguous class to each same-colored candidate in
  // turn.  At a discrete partition the color-induced bijection is checked
  // directly against the cover lists.
  std::function<bool(std::vector<int>, std::vector<int>)> search =
      [&](std::vector<int> ca, std::vector<int> cb) -> bool {
    std::size_t classes = 0;
    for (;;) {
      if (budget == 0) throw ResourceError("isomorphism guard exceeded");
      --budget;
      std::size_t before = classes;
      if (!sweep(ca, cb, classes)) return false;
      if (classes == before) break;
    }
    if (classes == n) {
      std::vector<int> image(n, -1);
      std::vector<int> where(n, -1);
      for (std::size_t i = 0; i < n; ++i) where[cb[i]] = static_cast<int>(i);
      for (std::size_t i = 0; i < n; ++i) image[i] = where[ca[i]];
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> got;
        for (int u : a.faces[i].up) got.push_back(image[u]);
        std::sort(got.begin(), got.end());
        auto want = b.faces[image[i]].up;
        std::sort(want.begin(), want.end());
        if (got != want) return false;
      }
      return true;
    }
    std::map<int, std::vector<int>> cells_a, cells_b;
    for (std::size_t i = 0; i < n; ++i) {
      cells_a[ca[i]].push_back(static_cast<int>(i));
      cells_b[cb[i]].push_back(static_cast<int>(i));
    }
    int pick = -1;
    std::size_t best = n + 1;
    for (const auto& [col, members] : cells_a) {
      if (members.size() > 1 && members.size() < best) {
        best = members.size();
        pick = col;
      }
    }
    int x = cells_a[pick][0];
    for (int y : cells_b[pick]) {
      auto ca2 = ca;
      auto cb2 = cb;
      ca2[x] = static_cast<int>(classes);
      cb2[y] = static_cast<int>(classes);
      if (search(std::move(ca2), std::move(cb2))) return true;
    }
    return false;
  };

  std::vector<int> ca(n), cb(n);
  for (std::size_t i = 0; i < n; ++i) ca[i] = a.faces[i].rank + 1;
  for (std::size_t i = 0; i < n; ++i) cb[i] = b.faces[i].rank + 1;
  return search(std::move(ca), std::move(cb));
}

RegularityReport is_regular(const FacePoset& pos) {
  RegularityReport rep;
  std::vector<char> member(pos.faces.size(), 1);
  std::vector<std::vector<int>> flags;
  collect_chains(pos, 0, pos.greatest(), member, flags);
  rep.flags = flags.size();
  if (flags.empty()) return rep;

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i].size() != flags[0].size()) return rep;  // ungraded: not regular
    index[flags[i]] = static_cast<int>(i);
  }
  // i-adjacency table over interior positions 1..top_rank (ranks 0..top-1).
  std::size_t positions = flags[0].size() - 2;
  std::vector<std::vector<int>> adj(flags.size(),
                                    std::vector<int>(positions, -1));
  std::vector<int> alts;
  for (std::size_t fi = 0; fi < flags.size(); ++fi) {
    std::vector<int> chain = flags[fi];
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
      interior_alternatives(pos, chain, i, member, alts);
      if (alts.size() != 1) return rep;  // diamond failure: not regular
      int old = chain[i];
      chain[i] = alts[0];
      auto it = index.find(chain);
      chain[i] = old;
      if (it == index.end()) return rep;
      adj[fi][i - 1] = it->second;
    }
  }

  std::size_t successes = 0;
  std::vector<int> phi(flags.size());
  for (std::size_t target = 0; target < flags.size(); ++target) {
    std::fill(phi.begin(), phi.end(), -1);
    phi[0] = static_cast<int>(target);
    std::queue<int> q;
    q.push(0);
    bool ok = true;
    while (!q.empty() && ok) {
      int f = q.front();
      q.pop();
      for (std::size_t i = 0; i < positions; ++i) {
        int fn = adj[f][i];
        int gn = adj[phi[f]][i];
        if (phi[fn] == -1) {
          phi[fn] = gn;
          q.push(fn);
        } else if (phi[fn] != gn) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++successes;
  }
  rep.automorphisms = successes;
  rep.regular = successes == flags.size();
  return rep;
}

namespace {

FacePoset core_factor(const Graph& core, const std::vector<Color>& chain,
                      const std::vector<Color>& inner, std::size_t max_faces) {
  std::vector<Color> pal = chain;
  pal.insert(pal.end(), inner.begin(), inner.end());
  RootTemplate root;
  ColorWord w;
  w.chain = chain;
  w.inner = inner;
  root.sentinel_words.push_back(std::move(w));
  return build_component(core, Palette::of(pal), root, max_faces);
}

// rK of the graph with `count` isolated nodes carrying the universal block.
FacePoset block_factor(std::size_t count, const std::vector<Color>& block,
                       std::size_t max_faces) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i) {
    labels.push_back("u" + std::to_string(i));
  }
  Graph nullg(labels, {});
  RootTemplate root;
  root.sentinel_words.resize(count);
  root.universal_block = block;
  return build_component(nullg, Palette::of(block), root, max_faces);
}

}  // namespace

bool product_structure_check(const Graph& g, const Palette& p,
                             const ColorTemplate& face,
                             std::size_t max_faces) {
  FacePoset lhs = build_below(g, p, face, max_faces);

  std::vector<FacePoset> factors;
  for (std::size_t i = 0; i < face.tubing.size(); ++i) {
    const ColorWord& w = face.tube_words[i];
    CoreGraph core = core_graph(g, face.tubing, face.tubing[i]);
    std::vector<Color> chain(w.chain.begin() + 1, w.chain.end());
    factors.push_back(core_factor(core.graph, chain, w.inner, max_faces));
  }
  std::size_t untubed = 0;
  std::size_t si = 0;
  for (NodeMask cm : connected_components(g)) {
    if (std::find(face.tubing.begin(), face.tubing.end(), cm) !=
        face.tubing.end()) {
      continue;
    }
    ++untubed;
    const ColorWord& w = face.sentinel_words[si++];
    CoreGraph core = core_graph(g, face.tubing, cm);
    factors.push_back(core_factor(core.graph, w.chain, w.inner, max_faces));
  }
  factors.push_back(block_factor(untubed, face.universal_block, max_faces));
  return poset_isomorphic(lhs, direct_product(factors));
}

bool disconnected_product_check(const Graph& g, const Palette& p,
                                std::size_t max_faces) {
  std::vector<NodeMask> comps = connected_components(g);
  if (comps.size() < 2) {
    throw InputError("disconnected_product_check requires a disconnected graph");
  }
  std::vector<RootTemplate> roots = root_templates(g, p);
  std::vector<FacePoset> collection = build_collection(g, p, max_faces);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<FacePoset> factors;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const ColorWord& w = roots[k].sentinel_words[i];
      factors.push_back(core_factor(induced_subgraph(g, comps[i]), w.chain,
                                    w.inner, max_faces));
    }
    factors.push_back(
        block_factor(comps.size(), roots[k].universal_block, max_faces));
    if (!poset_isomorphic(collection[k], direct_product(factors))) return false;
  }
  return true;
}

}  // namespace cga
