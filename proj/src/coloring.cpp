#include "coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace cga {

Palette Palette::of(std::vector<Color> colors) {
  Palette p;
  p.colors = std::move(colors);
  std::sort(p.colors.begin(), p.colors.end());
  return p;
}

PaletteKind Palette::kind() const {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i == 0 || colors[i] != colors[i - 1]) ++distinct;
  }
  if (distinct == colors.size()) return PaletteKind::kFull;
  if (distinct == 1) return PaletteKind::kMonochrome;
  return PaletteKind::kMixed;
}

bool template_less(const ColorTemplate& a, const ColorTemplate& b) {
  if (a.tubing != b.tubing) return tubing_less(a.tubing, b.tubing);
  if (a.tube_words != b.tube_words) return a.tube_words < b.tube_words;
  if (a.sentinel_words != b.sentinel_words) {
    return a.sentinel_words < b.sentinel_words;
  }
  return a.universal_block < b.universal_block;
}

WordShape word_shape(const CoreGraph& core, bool colored) {
  int size = static_cast<int>(core.graph.size());
  int kappa = vertex_connectivity(core.graph);
  WordShape s;
  s.chain_len = colored ? kappa : kappa - 1;
  s.inner_len = size - kappa;
  return s;
}

std::vector<std::vector<Color>> distinct_arrangements(
    const std::vector<Color>& sorted, int k) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> cur;
  std::function<void(const std::vector<Color>&)> rec =
      [&](const std::vector<Color>& rem) {
        if (static_cast<int>(cur.size()) == k) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = 0; i < rem.size(); ++i) {
          if (i > 0 && rem[i] == rem[i - 1]) continue;
          std::vector<Color> next = rem;
          next.erase(next.begin() + i);
          cur.push_back(rem[i]);
          rec(next);
          cur.pop_back();
        }
      };
  if (k >= 0 && k <= static_cast<int>(sorted.size())) rec(sorted);
  return out;
}

std::vector<std::vector<Color>> distinct_submultisets(
    const std::vector<Color>& sorted, int k) {
  // Distinct values with multiplicities.
  std::vector<std::pair<Color, int>> runs;
  for (const Color& c : sorted) {
    if (!runs.empty() && runs.back().first == c) {
      ++runs.back().second;
    } else {
      runs.emplace_back(c, 1);
    }
  }
  std::vector<std::vector<Color>> out;
  std::vector<Color> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t ri, int need) {
    if (need == 0) {
      out.push_back(cur);
      return;
    }
    if (ri == runs.size()) return;
    int take_max = std::min(runs[ri].second, need);
    for (int take = take_max; take >= 0; --take) {
      for (int i = 0; i < take; ++i) cur.push_back(runs[ri].first);
      rec(ri + 1, need - take);
      for (int i = 0; i < take; ++i) cur.pop_back();
    }
  };
  if (k >= 0 && k <= static_cast<int>(sorted.size())) rec(0, k);
  return out;
}

std::vector<Color> multiset_minus(const std::vector<Color>& a,
                                  const std::vector<Color>& b) {
  std::vector<Color> out;
  std::size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j < b.size() && b[j] < a[i]) {
      throw StructureError("multiset_minus: subtrahend not contained");
    } else {
      out.push_back(a[i]);
      ++i;
    }
  }
  if (j < b.size()) throw StructureError("multiset_minus: subtrahend not contained");
  return out;
}

namespace {

std::vector<Color> sorted_copy(std::vector<Color> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Index of a component's word among the untubed components of c.
int sentinel_index(const ColorTemplate& c, const std::vector<NodeMask>& comps,
                   NodeMask comp) {
  int idx = 0;
  for (NodeMask cm : comps) {
    bool tubed =
        std::find(c.tubing.begin(), c.tubing.end(), cm) != c.tubing.end();
    if (cm == comp) {
      if (tubed) throw StructureError("component tube already present");
      return idx;
    }
    if (!tubed) ++idx;
  }
  throw StructureError("node set is not a component");
}

void insert_tube_word(ColorTemplate& c, Tube t, ColorWord w) {
  auto it = std::lower_bound(c.tubing.begin(), c.tubing.end(), t, tube_less);
  std::size_t pos = static_cast<std::size_t>(it - c.tubing.begin());
  c.tubing.insert(it, t);
  c.tube_words.insert(c.tube_words.begin() + pos, std::move(w));
}

// All fillings of `shape` by the ordered colors of `chain_seq` followed by
// colors drawn from `pool`, keeping relative order: the received ordered
// colors occupy a leading stretch of the new chain (overflow drops into the
// new inner block), and pool colors may complete the chain in any order.
std::vector<ColorWord> word_arrangements(const std::vector<Color>& chain_seq,
                                         const std::vector<Color>& pool,
                                         WordShape shape) {
  int r = static_cast<int>(chain_seq.size());
  std::vector<ColorWord> out;
  if (r >= shape.chain_len) {
    ColorWord w;
    w.chain.assign(chain_seq.begin(), chain_seq.begin() + shape.chain_len);
    w.inner.assign(chain_seq.begin() + shape.chain_len, chain_seq.end());
    w.inner.insert(w.inner.end(), pool.begin(), pool.end());
    std::sort(w.inner.begin(), w.inner.end());
    out.push_back(std::move(w));
    return out;
  }
  for (const auto& tail : distinct_arrangements(pool, shape.chain_len - r)) {
    ColorWord w;
    w.chain = chain_seq;
    w.chain.insert(w.chain.end(), tail.begin(), tail.end());
    w.inner = multiset_minus(pool, sorted_copy(tail));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<ColorTemplate> children_for_tube(const Graph& g,
                                             const ColorTemplate& parent,
                                             Tube t,
                                             const std::vector<NodeMask>& comps) {
  std::vector<ColorTemplate> out;

  if (std::find(comps.begin(), comps.end(), t) != comps.end()) {
    // A component tube colors itself from the universal block; the rest of
    // its word is already fixed by the sentinel.
    int sidx = sentinel_index(parent, comps, t);
    const ColorWord& w = parent.sentinel_words[sidx];
    for (std::size_t i = 0; i < parent.universal_block.size(); ++i) {
      if (i > 0 && parent.universal_block[i] == parent.universal_block[i - 1]) {
        continue;
      }
      const Color& x = parent.universal_block[i];
      ColorTemplate child = parent;
      child.universal_block = multiset_minus(parent.universal_block, {x});
      child.sentinel_words.erase(child.sentinel_words.begin() + sidx);
      ColorWord cw;
      cw.chain.reserve(w.chain.size() + 1);
      cw.chain.push_back(x);
      cw.chain.insert(cw.chain.end(), w.chain.begin(), w.chain.end());
      cw.inner = w.inner;
      insert_tube_word(child, t, std::move(cw));
      out.push_back(std::move(child));
    }
    return out;
  }

  // Enclosing region: smallest tube properly containing t, else the sentinel
  // of t's component.
  NodeMask owner = 0;
  int owner_idx = -1;
  for (std::size_t i = 0; i < parent.tubing.size(); ++i) {
    Tube s = parent.tubing[i];
    if (s != t && (t & s) == t) {
      if (owner_idx < 0 || std::popcount(s) < std::popcount(owner)) {
        owner = s;
        owner_idx = static_cast<int>(i);
      }
    }
  }
  bool owner_is_tube = owner_idx >= 0;
  int owner_sidx = -1;
  if (!owner_is_tube) {
    for (NodeMask cm : comps) {
      if ((t & cm) == t) {
        owner = cm;
        break;
      }
    }
    owner_sidx = sentinel_index(parent, comps, owner);
  }
  const ColorWord& w0 = owner_is_tube ? parent.tube_words[owner_idx]
                                      : parent.sentinel_words[owner_sidx];

  Tubing child_tubing = parent.tubing;
  child_tubing.insert(
      std::lower_bound(child_tubing.begin(), child_tubing.end(), t, tube_less),
      t);
  CoreGraph core_owner = core_graph(g, child_tubing, owner);
  CoreGraph core_new = core_graph(g, child_tubing, t);
  WordShape shape_owner = word_shape(core_owner, owner_is_tube);
  WordShape shape_new = word_shape(core_new, true);
  int k = shape_owner.size();
  if (k + shape_new.size() != static_cast<int>(w0.size())) {
    throw StructureError("word sizes do not add up while splitting");
  }

  int j = std::min(k, static_cast<int>(w0.chain.size()));
  std::vector<Color> prefix(w0.chain.begin(), w0.chain.begin() + j);
  std::vector<Color> suffix(w0.chain.begin() + j, w0.chain.end());
  for (const auto& keep : distinct_submultisets(w0.inner, k - j)) {
    std::vector<Color> passed = multiset_minus(w0.inner, keep);
    for (const ColorWord& w_owner :
         word_arrangements(prefix, keep, shape_owner)) {
      for (const ColorWord& w_new :
           word_arrangements(suffix, passed, shape_new)) {
        ColorTemplate child = parent;
        if (owner_is_tube) {
          child.tube_words[owner_idx] = w_owner;
        } else {
          child.sentinel_words[owner_sidx] = w_owner;
        }
        insert_tube_word(child, t, w_new);
        out.push_back(std::move(child));
      }
    }
  }
  return out;
}

bool compatible_with_all(const Graph& g, const Tubing& tubing, Tube t) {
  for (Tube s : tubing) {
    if (s == t || !tubes_compatible(g, s, t)) return false;
  }
  return true;
}

}  // namespace

std::vector<RootTemplate> root_templates(const Graph& g, const Palette& p) {
  if (p.size() + 1 != g.size()) {
    throw InputError("palette must have one color per node but one");
  }
  std::vector<NodeMask> comps = connected_components(g);
  std::vector<RootTemplate> out;
  RootTemplate acc;
  std::function<void(std::size_t, std::vector<Color>)> rec =
      [&](std::size_t ci, std::vector<Color> remaining) {
        if (ci == comps.size()) {
          acc.universal_block = remaining;
          out.push_back(acc);
          return;
        }
        Graph comp = induced_subgraph(g, comps[ci]);
        int kappa = vertex_connectivity(comp);
        int want = static_cast<int>(comp.size()) - 1;
        for (const auto& share : distinct_submultisets(remaining, want)) {
          std::vector<Color> rest = multiset_minus(remaining, share);
          for (const auto& chain : distinct_arrangements(share, kappa - 1)) {
            ColorWord w;
            w.chain = chain;
            w.inner = multiset_minus(share, sorted_copy(chain));
            acc.sentinel_words.push_back(std::move(w));
            rec(ci + 1, rest);
            acc.sentinel_words.pop_back();
          }
        }
      };
  rec(0, p.colors);
  std::sort(out.begin(), out.end(), template_less);
  return out;
}

bool validate_template(const Graph& g, const Palette& p,
                       const ColorTemplate& c) {
  for (Tube t : c.tubing) {
    if (t & ~g.full_mask()) return false;
  }
  if (!is_valid_tubing(g, c.tubing)) return false;
  if (!std::is_sorted(c.tubing.begin(), c.tubing.end(), tube_less)) {
    return false;
  }
  if (c.tube_words.size() != c.tubing.size()) return false;

  std::vector<NodeMask> comps = connected_components(g);
  std::vector<NodeMask> untubed;
  std::size_t tubed_comps = 0;
  for (NodeMask cm : comps) {
    if (std::find(c.tubing.begin(), c.tubing.end(), cm) != c.tubing.end()) {
      ++tubed_comps;
    } else {
      untubed.push_back(cm);
    }
  }
  if (c.sentinel_words.size() != untubed.size()) return false;
  if (!std::is_sorted(c.universal_block.begin(), c.universal_block.end())) {
    return false;
  }
  std::size_t want_block =
      comps.empty() ? 0 : comps.size() - 1 - tubed_comps;
  if (c.universal_block.size() != want_block) return false;

  std::vector<Color> all = c.universal_block;
  auto check_word = [&](const ColorWord& w, NodeMask owner, bool colored) {
    CoreGraph core = core_graph(g, c.tubing, owner);
    WordShape shape = word_shape(core, colored);
    if (static_cast<int>(w.chain.size()) != shape.chain_len) return false;
    if (static_cast<int>(w.inner.size()) != shape.inner_len) return false;
    if (!std::is_sorted(w.inner.begin(), w.inner.end())) return false;
    all.insert(all.end(), w.chain.begin(), w.chain.end());
    all.insert(all.end(), w.inner.begin(), w.inner.end());
    return true;
  };
  for (std::size_t i = 0; i < c.tubing.size(); ++i) {
    if (!check_word(c.tube_words[i], c.tubing[i], true)) return false;
  }
  for (std::size_t i = 0; i < untubed.size(); ++i) {
    if (!check_word(c.sentinel_words[i], untubed[i], false)) return false;
  }
  std::sort(all.begin(), all.end());
  return all == p.colors;
}

std::vector<ColorTemplate> enumerate_children(const Graph& g, const Palette& p,
                                              const ColorTemplate& parent) {
  (void)p;
  std::vector<ColorTemplate> out;
  if (g.size() == 0 || parent.tubing.size() == g.size() - 1) return out;
  std::vector<NodeMask> comps = connected_components(g);
  for (Tube t : enumerate_tubes(g)) {
    if (std::find(parent.tubing.begin(), parent.tubing.end(), t) !=
        parent.tubing.end()) {
      continue;
    }
    if (!compatible_with_all(g, parent.tubing, t)) continue;
    auto kids = children_for_tube(g, parent, t, comps);
    out.insert(out.end(), kids.begin(), kids.end());
  }
  std::sort(out.begin(), out.end(), template_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool covers(const Graph& g, const Palette& p, const ColorTemplate& parent,
            const ColorTemplate& child) {
  if (!validate_template(g, p, parent) || !validate_template(g, p, child)) {
    throw InputError("covers requires templates valid for the graph and palette");
  }
  if (child.tubing.size() != parent.tubing.size() + 1) return false;
  Tube added = 0;
  std::size_t i = 0;
  for (Tube t : child.tubing) {
    if (i < parent.tubing.size() && parent.tubing[i] == t) {
      ++i;
    } else if (!added) {
      added = t;
    } else {
      return false;
    }
  }
  if (i != parent.tubing.size() || !added) return false;
  if (!compatible_with_all(g, parent.tubing, added)) return false;
  std::vector<NodeMask> comps = connected_components(g);
  auto kids = children_for_tube(g, parent, added, comps);
  return std::find(kids.begin(), kids.end(), child) != kids.end();
}

Tubing monochromize(const ColorTemplate& c) { return c.tubing; }

}  // namespace cga
