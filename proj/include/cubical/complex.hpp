#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/errors.hpp"

namespace cubical {

using Edge = std::pair<int, int>;

// One side of a hyperplane: the vertex set of the maximal subcomplex in a
// component of the cut. Complements are paired as ids 2i / 2i+1.
struct Halfspace {
  int id = -1;
  int hyperplane = -1;
  int complement = -1;
  Bitset verts;  // over vertices
};

// A Djokovic-Winkler class of parallel edges.
struct Hyperplane {
  int id = -1;
  std::vector<Edge> edge_class;
  std::array<int, 2> sides{-1, -1};  // halfspace ids (2i, 2i+1)
};

// Inclusion order and transversality, all as bitset rows.
struct PocsetRelations {
  // leq[a].test(b) iff verts(a) subset of verts(b); reflexive.
  std::vector<Bitset> leq;
  // transverse[i].test(j), over hyperplane ids; irreflexive, symmetric.
  std::vector<Bitset> transverse;
  // crossing_halfspaces[i]: halfspace ids whose hyperplane crosses i.
  std::vector<Bitset> crossing_halfspaces;
};

// Finite CAT(0) cube complex, represented by its 1-skeleton (a median
// graph). Immutable after build_complex; all derived data is precomputed:
// the full distance matrix, hyperplanes, halfspace bitsets, pocset
// relations, and per-vertex halfspace membership rows.
struct CubeComplex {
  int n = 0;
  std::string name;
  std::vector<Edge> edges;  // canonical: each pair ascending, sorted
  std::vector<std::vector<int>> adj;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Halfspace> halfspaces;
  // sigma[v]: bitset of halfspace ids containing v.
  std::vector<Bitset> vertex_halfspaces;
  PocsetRelations rel;

  int dist(int u, int v) const { return dist_[size_t(u) * n + v]; }
  const int32_t* dist_row(int u) const { return dist_.data() + size_t(u) * n; }

  int num_hyperplanes() const { return int(hyperplanes.size()); }
  int num_halfspaces() const { return int(halfspaces.size()); }

  const Bitset& hverts(int hs) const { return halfspaces[size_t(hs)].verts; }
  int hs_complement(int hs) const { return hs ^ 1; }
  int hs_hyperplane(int hs) const { return hs >> 1; }

  bool leq(int a, int b) const { return rel.leq[size_t(a)].test(b); }
  bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
  bool transverse(int i, int j) const { return rel.transverse[size_t(i)].test(j); }

  std::vector<int32_t> dist_;  // n*n, filled by build_complex
};

// Builds and fully validates a complex from its 1-skeleton.
// Throws Error with code MalformedEdge, Disconnected or NotMedian (witness
// triple attached) on invalid input, SeparationFailure if hyperplane
// extraction meets an inconsistency.
CubeComplex build_complex(int n, std::vector<Edge> edges, std::string name = "");

// Accessors matching the operation surface; all data is computed at build.
inline const std::vector<Hyperplane>& hyperplane_classes(const CubeComplex& c) {
  return c.hyperplanes;
}
inline const PocsetRelations& relations(const CubeComplex& c) { return c.rel; }

}  // namespace cubical
