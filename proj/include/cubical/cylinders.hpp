#pragma once

#include "cubical/bitset.hpp"
#include "cubical/complex.hpp"

namespace cubical {

// C(x,y) = I_D(x,y): every vertex avoiding all D-peripheral halfspaces.
struct Cylinder {
  int x = 0, y = 0, D = 0;
  Bitset verts;     // over vertices
  Bitset defining;  // D-peripheral halfspace ids
};

// Longest nested chain k_1 < ... < k_m inside K whose hyperplanes all
// cross the hyperplane of hs; 0 when nothing in K crosses it.
int intersection_number(const CubeComplex& c, int hs, const Bitset& K);

// Peripheral halfspaces of (x,y) whose intersection number against the
// separating set is at most D.
Bitset d_peripheral(const CubeComplex& c, int x, int y, int D);

Cylinder cylinder(const CubeComplex& c, int x, int y, int D);

// D-peripheral halfspaces whose projection to I(x,y) stays strictly
// rho-close to x: max over the projection set of 2*d(x,.) < rho2.
Bitset d_peripheral_truncated(const CubeComplex& c, int x, int y, int D,
                              int rho2);

}  // namespace cubical
