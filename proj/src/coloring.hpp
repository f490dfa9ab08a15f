#pragma once

#include "tubing.hpp"

namespace cga {

using Color = std::string;

enum class PaletteKind { kFull, kMonochrome, kMixed };

// Multiset of colors, one fewer than the graph has nodes. Kept sorted.
struct Palette {
  std::vector<Color> colors;

  static Palette of(std::vector<Color> colors);
  std::size_t size() const { return colors.size(); }
  PaletteKind kind() const;
  bool operator==(const Palette&) const = default;
};

// The colors a region (a tube, or an untubed component sentinel) carries.
// chain = the ordered part: for a tube, its own color followed by one color
// per outer block, largest outer tube first; for a sentinel, the outer
// blocks only. inner = the unordered remainder, kept sorted.
struct ColorWord {
  std::vector<Color> chain;
  std::vector<Color> inner;

  bool operator==(const ColorWord&) const = default;
  auto operator<=>(const ColorWord&) const = default;
  std::size_t size() const { return chain.size() + inner.size(); }
};

// A tubing plus an exact distribution of the palette: one word per tube, one
// word per component without its component tube (for a connected graph, the
// single universal sentinel), and a reserve block holding colors for
// component tubes not yet added (always empty for a connected graph).
struct ColorTemplate {
  Tubing tubing;
  std::vector<ColorWord> tube_words;      // parallel to tubing
  std::vector<ColorWord> sentinel_words;  // untubed components, in order
  std::vector<Color> universal_block;     // sorted multiset

  bool operator==(const ColorTemplate&) const = default;
};

using RootTemplate = ColorTemplate;

bool template_less(const ColorTemplate& a, const ColorTemplate& b);

struct WordShape {
  int chain_len = 0;
  int inner_len = 0;
  int size() const { return chain_len + inner_len; }
};

// Chain length is the core connectivity for a colored owner (first block
// plus one slot per outer block) and one less for an uncolored sentinel.
WordShape word_shape(const CoreGraph& core, bool colored);

// Roots carry the empty tubing: one per distinct ordering of the outer
// colors of each component, for each split of the palette among components.
std::vector<RootTemplate> root_templates(const Graph& g, const Palette& p);

bool validate_template(const Graph& g, const Palette& p,
                       const ColorTemplate& c);

// True when child arises from parent by adding one tube and re-dealing the
// enclosing word: the enclosing region keeps the leading min(k, chain)
// colors of its old word plus freely chosen inner colors, the new tube takes
// the rest, and each side refills its own shape so that colors never move
// ahead of colors that preceded them. A new component tube instead draws its
// color from the universal block and keeps its sentinel word.
bool covers(const Graph& g, const Palette& p, const ColorTemplate& parent,
            const ColorTemplate& child);

std::vector<ColorTemplate> enumerate_children(const Graph& g, const Palette& p,
                                              const ColorTemplate& parent);

Tubing monochromize(const ColorTemplate& c);

// Multiset helpers used across the coloring and exchange modules. Inputs are
// sorted; outputs are canonically ordered and duplicate-free.
std::vector<std::vector<Color>> distinct_arrangements(
    const std::vector<Color>& sorted, int k);
std::vector<std::vector<Color>> distinct_submultisets(
    const std::vector<Color>& sorted, int k);
std::vector<Color> multiset_minus(const std::vector<Color>& a,
                                  const std::vector<Color>& b);

}  // namespace cga
