#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubical/complex.hpp"

namespace cubical {

// Abstract pocset. `pairs` lists the wall ids (must be 0..W-1 in some
// order); literal 2w is the positive side of wall w, literal 2w+1 its
// complement. `order` lists relations a <= b between literals. `base`,
// when present, is one literal per wall naming a consistent orientation
// that becomes vertex 0 of the dual.
struct PocsetSpec {
  std::vector<int> pairs;
  std::vector<std::pair<int, int>> order;
  std::optional<std::vector<int>> base;
};

// Random tree on n vertices from a seeded Prufer sequence.
CubeComplex gen_tree(int n, uint64_t seed);

// Hypercube Q_d, 1 <= d <= 12.
CubeComplex gen_hypercube(int d);

// (m+1) x (n+1) vertex grid; the negative control: grid_D = min(m,n).
CubeComplex gen_grid(int m, int n);

// Width-one diagonal band {(i,j) in [0,n]^2 : |i-j| <= 1} with grid edges;
// the canonical hyperbolic 2-dimensional family.
CubeComplex gen_staircase(int n);

// Dual cube complex of a finite pocset: vertices are consistent
// orientations, edges flip one wall. Throws InconsistentSpec/TooManyPairs.
CubeComplex sageev_dual(const PocsetSpec& spec);

// The pocset of an existing complex (walls = hyperplanes, literal ids =
// halfspace ids); round-trips through sageev_dual up to isomorphism.
PocsetSpec pocset_of(const CubeComplex& c);

}  // namespace cubical
