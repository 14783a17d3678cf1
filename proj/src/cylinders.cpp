#include "cubical/cylinders.hpp"

#include <algorithm>

#include "cubical/errors.hpp"
#include "cubical/intervals.hpp"

namespace cubical {

int intersection_number(const CubeComplex& c, int hs, const Bitset& K) {
  int hp = c.hs_hyperplane(hs);
  std::vector<int> cand;
  K.for_each([&](int k) {
    if (c.transverse(hp, c.hs_hyperplane(k))) cand.push_back(k);
  });
  if (cand.empty()) return 0;
  // Candidates in popcount order make strict nesting a forward relation.
  std::vector<int> pc(cand.size());
  for (size_t i = 0; i < cand.size(); i++) pc[i] = c.hverts(cand[i]).count();
  std::vector<int> idx(cand.size());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = int(i);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return pc[a] < pc[b]; });
  std::vector<int> dp(cand.size(), 1);
  int best = 1;
  for (size_t ii = 0; ii < idx.size(); ii++) {
    int i = idx[ii];
    for (size_t jj = 0; jj < ii; jj++) {
      int j = idx[jj];
      if (c.strictly_less(cand[j], cand[i]) && dp[j] + 1 > dp[i])
        dp[i] = dp[j] + 1;
    }
    best = std::max(best, dp[i]);
  }
  return best;
}

Bitset d_peripheral(const CubeComplex& c, int x, int y, int D) {
  Bitset per = peripheral(c, x, y);
  Bitset sep = separating(c, x, y);
  Bitset out(c.num_halfspaces());
  per.for_each([&](int h) {
    if (intersection_number(c, h, sep) <= D) out.set(h);
  });
  return out;
}

Cylinder cylinder(const CubeComplex& c, int x, int y, int D) {
  Cylinder cyl;
  cyl.x = x;
  cyl.y = y;
  cyl.D = D;
  cyl.defining = d_peripheral(c, x, y, D);
  cyl.verts = Bitset::ones(c.n);
  cyl.defining.for_each([&](int h) { cyl.verts.and_not(c.hverts(h)); });
  return cyl;
}

Bitset d_peripheral_truncated(const CubeComplex& c, int x, int y, int D,
                              int rho2) {
  Bitset dper = d_peripheral(c, x, y, D);
  Interval iv = interval(c, x, y);
  Bitset out(c.num_halfspaces());
  const int32_t* dx = c.dist_row(x);
  dper.for_each([&](int h) {
    int dmax = 0;
    project_set(c, iv, h).for_each(
        [&](int v) { dmax = std::max(dmax, int(dx[v])); });
    if (2 * dmax < rho2) out.set(h);
  });
  return out;
}

}  // namespace cubical
