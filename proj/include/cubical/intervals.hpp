#pragma once

#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/complex.hpp"

namespace cubical {

// I(x,y) with its gate (nearest-point projection) map. gate[v] is the
// unique closest interval vertex to v; identity on the interval itself.
struct Interval {
  int x = 0, y = 0;
  Bitset verts;            // over vertices
  std::vector<int> gate;   // vertex -> vertex
};

// The two halfspace families attached to an ordered pair: halfspaces
// separating x from y (oriented toward y) and halfspaces avoiding both.
struct HalfspaceSets {
  Bitset separating;  // h with x not in h, y in h
  Bitset peripheral;  // h with x,y both in h*
};

// Halfspaces h with x not in h and y in h; |result| = d(x,y).
Bitset separating(const CubeComplex& c, int x, int y);

// Halfspaces avoiding both endpoints.
Bitset peripheral(const CubeComplex& c, int x, int y);

HalfspaceSets halfspace_sets(const CubeComplex& c, int x, int y);

// Builds I(x,y) from the metric formula, checks it against the
// intersection of peripheral halfspace complements, and computes gates.
Interval interval(const CubeComplex& c, int x, int y);

inline int project(const CubeComplex&, const Interval& iv, int v) {
  return iv.gate[v];
}

// Image of a halfspace under the gate map: {gate[v] : v in halfspace hs}.
Bitset project_set(const CubeComplex& c, const Interval& iv, int hs);

// The unique vertex lying on geodesics between each pair of x,y,z.
int median(const CubeComplex& c, int x, int y, int z);

// Doubled Gromov product 2*(y.z)_x = d(x,y)+d(x,z)-d(y,z); kept doubled so
// half-integer radii stay integral.
int gromov_product2(const CubeComplex& c, int x, int y, int z);

// Dilworth chain decomposition of the hyperplanes separating x,y into at
// most max_chains nested chains, plus the induced l1-isometric coordinates
// of every interval vertex. coord[v] is empty for v outside the interval.
struct IntervalEmbedding {
  std::vector<std::vector<int>> chains;  // halfspace ids, nested ascending
  std::vector<std::vector<int>> coord;   // per vertex, size = chains.size()
};
IntervalEmbedding embed_interval(const CubeComplex& c, int x, int y,
                                 int max_chains);

// Lexicographically least geodesic from x to y (smallest next vertex id at
// every step); used when measuring how far interval vertices stray from a
// single geodesic.
std::vector<int> interval_geodesic(const CubeComplex& c, int x, int y);

// max over a of min over b of d(a,b), i.e. how far A strays from B.
int directed_hausdorff(const CubeComplex& c, const Bitset& a,
                       const std::vector<int>& b);

}  // namespace cubical
