#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/complex.hpp"

namespace cubical {

// Result of the coverage check on one triple: do the rho-truncations of
// C(x,y) and C(x,z) agree outside R-balls planted at the witness centers?
struct TripleReport {
  int x = 0, y = 0, z = 0;
  int rho2 = 0;  // doubled Gromov product (y.z)_x
  int sym_diff_size = 0;
  std::vector<int> witness_centers;
  int R_used = 0;
  bool covered = true;
  int empirical_k = 0;  // greedy minimal subcover size; 0 when nothing to cover
};

// Aggregates over a triple sweep. delta_x2 is the doubled 4-point constant.
struct SweepReport {
  std::string complex_name;
  int D = 0, dim_d = 0, delta_x2 = 0, R = 0;
  long triples_checked = 0;
  int max_empirical_k = 0;
  int max_projection_difference = 0;
  std::vector<TripleReport> failures;
  std::string mode;  // "all" or "sample"
  long sample_count = 0;
  uint64_t seed = 0;
};

// samples == 0 means every ordered triple; otherwise `samples` seeded draws.
struct SweepMode {
  long samples = 0;
  uint64_t seed = 0;
};

// Symmetric difference of C(x,y) and C(x,z), both truncated to the closed
// ball B(x, rho) with rho the Gromov product (y.z)_x.
Bitset truncated_sym_diff(const CubeComplex& c, int x, int y, int z, int D);

// The center set P: the median plus the projections to I(x,y) of
// halfspaces in the truncated difference family of (x,y) against (x,z),
// and symmetrically with y,z swapped. The truncation threshold is
// rho + D*dim: a superset of the strictly necessary family, which can only
// add balls and never weakens the coverage check.
std::vector<int> witness_centers(const CubeComplex& c, int x, int y, int z,
                                 int D);

// Full verdict for one triple at radius R (pass R < 0 for the default 5Dd).
TripleReport check_triple(const CubeComplex& c, int x, int y, int z, int D,
                          int R = -1);

// Number of distinct projection sets over the difference family taken at
// the tighter threshold rho - D*dim (the bounded-difference quantity).
int projection_difference_count(const CubeComplex& c, int x, int y, int z,
                                int D);

// Runs check_triple over all ordered triples (or a seeded sample), fully
// deterministic for a fixed seed regardless of thread count. Pass D < 0
// for the complex's max grid size, R < 0 for 5Dd.
SweepReport stability_sweep(const CubeComplex& c, int D = -1, int R = -1,
                            SweepMode mode = {}, int threads = 1);

// True iff perm maps every requested cylinder onto the cylinder of the
// image pair (all unordered pairs when `pairs` is empty). Throws
// NotAutomorphism if perm does not preserve the graph.
bool check_invariance(const CubeComplex& c, const std::vector<int>& perm,
                      int D = -1, const std::vector<Edge>& pairs = {});

}  // namespace cubical
