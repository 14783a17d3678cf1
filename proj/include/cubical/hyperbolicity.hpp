#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "cubical/complex.hpp"

namespace cubical {

// Two nested chains of halfspaces (ascending) whose hyperplanes pairwise
// cross; size = common length.
struct Grid {
  std::vector<int> pencil_a, pencil_b;  // halfspace ids
  int size = 0;
};

// The geometric constants of a complex. Half-integers are doubled:
// delta_x2 = 2*delta4, theta_x2 = 2*(Dd + delta4).
struct GeometryConstants {
  int delta_x2 = 0;
  int dim_d = 0;
  int grid_D = 0;
  int theta_x2 = 0;
  int R = 0;  // 5*D*d
};

// Doubled four-point constant: max over vertex 4-tuples of the largest
// pair-sum minus the second largest (pair-sums d(x,y)+d(z,w) etc).
int delta_four_point_x2(const CubeComplex& c, int threads = 1);

// Largest pairwise-transverse hyperplane family (= top cube dimension),
// by exact branch-and-bound clique search.
int dimension(const CubeComplex& c);

// Largest m admitting two crossing pencils of length m, with a validated
// witness when m >= 1. Uses chain-length DP plus an endpoint scan; the
// inner crossings follow from the endpoint crossings (sandwich property).
std::pair<int, std::optional<Grid>> max_grid_size(const CubeComplex& c);

GeometryConstants geometry_constants(const CubeComplex& c, int threads = 1);

// The explicit constants of the bounded-difference machinery, exact via
// bignums. K is an upper bound (the cell count of [0,Dd]^d is (2Dd+1)^d,
// and subcomplexes are subsets of cells, so K <= 2^((2Dd+1)^d)); K and M
// are materialized only when that exponent is small enough to be worth
// storing, but M = M_over_K * K holds exactly either way.
struct StabilityConstants {
  int d = 1, D = 0, delta_x2 = 0;
  mpz_class L;         // 2D+2
  mpz_class R;         // 5Dd
  mpz_class theta_x2;  // 2Dd + delta_x2
  mpz_class T;         // (D+1)-fold iterate of N2 starting from L
  mpz_class K_log2;    // exponent: K <= 2^K_log2
  mpz_class M_over_K;  // T * (Dd+1)^2 * d
  std::optional<mpz_class> K, M;

  static mpz_class n2(const mpz_class& m, int d) { return d * m * m * m; }
  // v <= M? Decidable without materializing M.
  bool bounds(long v) const;
};

StabilityConstants stability_constants(int d, int delta_x2, int D);

}  // namespace cubical
