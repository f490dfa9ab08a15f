#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace cga {

struct AxiomReport {
  bool bounded = false;
  bool flag_length_ok = false;
  bool diamond_ok = false;
  bool strongly_flag_connected = false;
  bool simple = false;
  std::vector<std::string> witnesses;  // empty when all checks pass
  bool all_ok() const {
    return bounded && flag_length_ok && diamond_ok && strongly_flag_connected &&
           simple;
  }
};

struct SurfaceReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t facets = 0;
  std::map<std::size_t, std::size_t> census;  // polygon size -> facet count
  long long euler = 0;
  bool pseudomanifold_ok = false;
  std::optional<long long> genus;  // set only for closed orientable boundaries
};

struct RegularityReport {
  bool regular = false;
  std::size_t automorphisms = 0;
  std::size_t flags = 0;
};

// Each check appends human-readable witnesses for its failures when a sink
// is provided.
bool check_bounded(const FacePoset& pos,
                   std::vector<std::string>* witnesses = nullptr);
bool check_flag_length(const FacePoset& pos,
                       std::vector<std::string>* witnesses = nullptr);
bool check_diamond(const FacePoset& pos,
                   std::vector<std::string>* witnesses = nullptr);
bool check_strong_flag_connectivity(const FacePoset& pos,
                                    std::vector<std::string>* witnesses = nullptr);
bool check_simple(const FacePoset& pos,
                  std::vector<std::string>* witnesses = nullptr);

AxiomReport is_abstract_polytope(const FacePoset& pos);

// Boundary-surface statistics of a rank-3 poset.
SurfaceReport surface_report(const FacePoset& pos);

// Exact rank-preserving order isomorphism (refinement + backtracking).
bool poset_isomorphic(const FacePoset& a, const FacePoset& b,
                      std::size_t guard = 100000);

// Flag-transitivity via extension of a base flag to every flag.
RegularityReport is_regular(const FacePoset& pos);

// The section below the face is isomorphic to the product of the colorful
// associahedra of the cores of its tubing (tubes, untubed components, and
// the null-graph factor carrying the universal block).
bool product_structure_check(const Graph& g, const Palette& p,
                             const ColorTemplate& face,
                             std::size_t max_faces = kDefaultMaxFaces);

// Every component of a disconnected graph's collection is the product of
// the per-component colorful associahedra and the universal-block factor.
bool disconnected_product_check(const Graph& g, const Palette& p,
                                std::size_t max_faces = kDefaultMaxFaces);

}  // namespace cga
