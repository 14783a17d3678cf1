#include "cubical/hyperbolicity.hpp"

#include <algorithm>
#include <atomic>

#include "cubical/errors.hpp"
#include "cubical/rng.hpp"

namespace cubical {

int delta_four_point_x2(const CubeComplex& c, int threads) {
  int n = c.n;
  std::atomic<int> global_best{0};
  parallel_chunks(n, threads, [&](long lo, long hi) {
    int best = 0;
    for (int x = int(lo); x < int(hi); x++) {
      const int32_t* dx = c.dist_row(x);
      for (int y = x + 1; y < n; y++) {
        const int32_t* dy = c.dist_row(y);
        for (int z = y + 1; z < n; z++) {
          const int32_t* dz = c.dist_row(z);
          int dxy_zw_base = dx[y];
          for (int w = z + 1; w < n; w++) {
            int s1 = dxy_zw_base + dz[w];
            int s2 = dx[z] + dy[w];
            int s3 = dx[w] + dy[z];
            int hi2 = std::max({s1, s2, s3});
            int lo2 = std::min({s1, s2, s3});
            int mid = s1 + s2 + s3 - hi2 - lo2;
            if (hi2 - mid > best) best = hi2 - mid;
          }
        }
      }
    }
    int cur = global_best.load();
    while (best > cur && !global_best.compare_exchange_weak(cur, best)) {
    }
  });
  return global_best.load();
}

namespace {

struct CliqueSearch {
  const std::vector<Bitset>& adj;
  int best = 0;

  void expand(Bitset cand, int size) {
    if (size > best) best = size;
    int v = cand.find_first();
    while (v != -1) {
      if (size + cand.count() <= best) return;
      Bitset next = cand & adj[v];
      expand(std::move(next), size + 1);
      cand.reset(v);
      v = cand.find_next(v);
    }
  }
};

}  // namespace

int dimension(const CubeComplex& c) {
  int h = c.num_hyperplanes();
  if (h == 0) return 0;
  CliqueSearch cs{c.rel.transverse};
  cs.expand(Bitset::ones(h), 0);
  return cs.best;
}

namespace {

// Halfspace ids in ascending popcount order: a topological order for
// strict nesting (h < k implies |h| < |k|).
std::vector<int> nesting_topo_order(const CubeComplex& c) {
  std::vector<int> order(c.num_halfspaces());
  for (int i = 0; i < int(order.size()); i++) order[i] = i;
  std::vector<int> pc(order.size());
  for (int i = 0; i < int(order.size()); i++) pc[i] = c.hverts(i).count();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pc[a] < pc[b]; });
  return order;
}

// Walk back through the chain-length table to list one longest chain from
// a to b, ascending; ties resolved toward the smallest halfspace id.
std::vector<int> reconstruct_chain(const CubeComplex& c,
                                   const std::vector<std::vector<int16_t>>& cl,
                                   int a, int b) {
  std::vector<int> chain{b};
  int cur = b;
  while (cur != a) {
    int want = cl[a][cur] - 1;
    int pick = -1;
    for (int m = 0; m < c.num_halfspaces(); m++)
      if (cl[a][m] == want && c.strictly_less(m, cur)) {
        pick = m;
        break;
      }
    internal_check(pick >= 0, "chain reconstruction lost its way");
    chain.push_back(pick);
    cur = pick;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

std::pair<int, std::optional<Grid>> max_grid_size(const CubeComplex& c) {
  int hs = c.num_halfspaces();
  bool any_cross = false;
  for (int i = 0; i < c.num_hyperplanes() && !any_cross; i++)
    any_cross = c.rel.transverse[i].any();
  if (!any_cross) return {0, std::nullopt};

  auto topo = nesting_topo_order(c);
  // cl[a][b]: number of halfspaces on a longest chain a <= ... <= b, or 0
  // when incomparable.
  std::vector<std::vector<int16_t>> cl(hs, std::vector<int16_t>(hs, 0));
  for (int a = 0; a < hs; a++) {
    auto& row = cl[a];
    row[a] = 1;
    for (int bi : topo) {
      if (bi == a || !c.strictly_less(a, bi)) continue;
      int16_t bestc = 1;
      for (int m = 0; m < hs; m++)
        if (row[m] && c.strictly_less(m, bi) && row[m] + 1 > bestc)
          bestc = int16_t(row[m] + 1);
      row[bi] = bestc;
    }
  }

  struct PairLen {
    int a, b;
    int16_t len;
  };
  std::vector<PairLen> pairs;
  for (int a = 0; a < hs; a++)
    for (int b = 0; b < hs; b++)
      if (cl[a][b]) pairs.push_back({a, b, cl[a][b]});
  std::sort(pairs.begin(), pairs.end(), [](const PairLen& p, const PairLen& q) {
    if (p.len != q.len) return p.len > q.len;
    return std::pair(p.a, p.b) < std::pair(q.a, q.b);
  });

  int best = 0;
  int wa1 = -1, wa2 = -1, wb1 = -1, wb2 = -1;
  auto cross = [&](int p, int q) {
    return c.transverse(c.hs_hyperplane(p), c.hs_hyperplane(q));
  };
  for (const auto& pa : pairs) {
    if (pa.len <= best) break;
    for (const auto& pb : pairs) {
      if (pb.len <= best) break;
      if (cross(pa.a, pb.a) && cross(pa.a, pb.b) && cross(pa.b, pb.a) &&
          cross(pa.b, pb.b)) {
        best = std::min(pa.len, pb.len);
        wa1 = pa.a;
        wa2 = pa.b;
        wb1 = pb.a;
        wb2 = pb.b;
        break;
      }
    }
  }
  internal_check(best >= 1, "crossing exists but endpoint scan found none");

  Grid g;
  g.size = best;
  g.pencil_a = reconstruct_chain(c, cl, wa1, wa2);
  g.pencil_b = reconstruct_chain(c, cl, wb1, wb2);
  g.pencil_a.resize(best);
  g.pencil_b.resize(best);
  for (int i = 0; i < best; i++)
    for (int j = 0; j < best; j++)
      internal_check(cross(g.pencil_a[i], g.pencil_b[j]),
                     "witness grid has a non-crossing pair");
  return {best, std::move(g)};
}

GeometryConstants geometry_constants(const CubeComplex& c, int threads) {
  GeometryConstants g;
  g.delta_x2 = delta_four_point_x2(c, threads);
  g.dim_d = dimension(c);
  g.grid_D = max_grid_size(c).first;
  g.theta_x2 = 2 * g.grid_D * g.dim_d + g.delta_x2;
  g.R = 5 * g.grid_D * g.dim_d;
  return g;
}

bool StabilityConstants::bounds(long v) const {
  if (M) return *M >= v;
  if (v <= 0) return true;
  // M = M_over_K * 2^K_log2 with M_over_K >= 1 and K_log2 >= 63 here.
  return true;
}

StabilityConstants stability_constants(int d, int delta_x2, int D) {
  if (d < 1 || D < 0 || delta_x2 < 0)
    throw Error(Errc::BadArgument, "stability_constants: need d>=1, D>=0, delta>=0",
                {d, D, delta_x2});
  StabilityConstants p;
  p.d = d;
  p.D = D;
  p.delta_x2 = delta_x2;
  p.L = 2 * D + 2;
  p.R = 5 * D * d;
  p.theta_x2 = 2 * D * d + delta_x2;
  p.T = p.L;
  for (int i = 0; i <= D; i++) p.T = StabilityConstants::n2(p.T, d);

  int Dd = D * d;
  mpz_class cells = 2 * Dd + 1;
  mpz_pow_ui(p.K_log2.get_mpz_t(), cells.get_mpz_t(), d);
  p.M_over_K = p.T * (Dd + 1) * (Dd + 1) * d;
  if (p.K_log2 <= 1000000) {
    mpz_class k;
    mpz_ui_pow_ui(k.get_mpz_t(), 2, p.K_log2.get_ui());
    p.K = k;
    p.M = p.M_over_K * k;
  }
  return p;
}

}  // namespace cubical
