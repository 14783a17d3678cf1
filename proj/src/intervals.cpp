#include "cubical/intervals.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "cubical/errors.hpp"

namespace cubical {

Bitset separating(const CubeComplex& c, int x, int y) {
  Bitset r = c.vertex_halfspaces[y];
  r.and_not(c.vertex_halfspaces[x]);
  return r;
}

Bitset peripheral(const CubeComplex& c, int x, int y) {
  return ~(c.vertex_halfspaces[x] | c.vertex_halfspaces[y]);
}

HalfspaceSets halfspace_sets(const CubeComplex& c, int x, int y) {
  return {separating(c, x, y), peripheral(c, x, y)};
}

Interval interval(const CubeComplex& c, int x, int y) {
  Interval iv;
  iv.x = x;
  iv.y = y;
  iv.verts = Bitset(c.n);
  const int32_t* dx = c.dist_row(x);
  const int32_t* dy = c.dist_row(y);
  int dxy = dx[y];
  for (int z = 0; z < c.n; z++)
    if (dx[z] + dy[z] == dxy) iv.verts.set(z);

  Bitset per = peripheral(c, x, y);
  for (int z = 0; z < c.n; z++)
    internal_check(
        iv.verts.test(z) == !per.intersects(c.vertex_halfspaces[z]),
        "interval: metric and halfspace-intersection forms disagree");

  auto members = iv.verts.to_vector();
  iv.gate.assign(c.n, -1);
  for (int v = 0; v < c.n; v++) {
    if (iv.verts.test(v)) {
      iv.gate[v] = v;
      continue;
    }
    const int32_t* dv = c.dist_row(v);
    int best = -1, bestd = INT_MAX;
    bool unique = true;
    for (int z : members) {
      if (dv[z] < bestd) {
        bestd = dv[z];
        best = z;
        unique = true;
      } else if (dv[z] == bestd) {
        unique = false;
      }
    }
    internal_check(unique, "interval: nearest point is not unique");
    iv.gate[v] = best;
  }
  return iv;
}

Bitset project_set(const CubeComplex& c, const Interval& iv, int hs) {
  Bitset r(c.n);
  c.hverts(hs).for_each([&](int v) { r.set(iv.gate[v]); });
  return r;
}

int median(const CubeComplex& c, int x, int y, int z) {
  const int32_t* dx = c.dist_row(x);
  const int32_t* dy = c.dist_row(y);
  const int32_t* dz = c.dist_row(z);
  int dxy = dx[y], dxz = dx[z], dyz = dy[z];
  for (int v = 0; v < c.n; v++)
    if (dx[v] + dy[v] == dxy && dx[v] + dz[v] == dxz && dy[v] + dz[v] == dyz)
      return v;
  internal_check(false, "median: no vertex meets all three pairs");
  return -1;
}

int gromov_product2(const CubeComplex& c, int x, int y, int z) {
  int rho2 = c.dist(x, y) + c.dist(x, z) - c.dist(y, z);
  internal_check(rho2 == 2 * c.dist(x, median(c, x, y, z)),
                 "gromov product differs from distance to the median");
  return rho2;
}

IntervalEmbedding embed_interval(const CubeComplex& c, int x, int y,
                                 int max_chains) {
  auto sep = separating(c, x, y).to_vector();
  int k = int(sep.size());

  // Minimum chain cover of the nesting order on sep, via matching on the
  // comparability DAG: every matched edge glues two chain segments.
  std::vector<std::vector<int>> succ(k);
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++)
      if (c.strictly_less(sep[i], sep[j])) succ[i].push_back(j);

  std::vector<int> match_r(k, -1), match_l(k, -1);
  std::vector<char> used;
  std::function<bool(int)> augment = [&](int l) {
    for (int r : succ[l]) {
      if (used[r]) continue;
      used[r] = 1;
      if (match_r[r] < 0 || augment(match_r[r])) {
        match_r[r] = l;
        match_l[l] = r;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int l = 0; l < k; l++) {
    used.assign(k, 0);
    if (augment(l)) matched++;
  }

  int nchains = k - matched;
  if (k > 0 && nchains > max_chains)
    throw Error(Errc::ChainCountExceeded,
                "embed_interval: chain cover exceeds the dimension",
                {nchains, max_chains});

  IntervalEmbedding emb;
  for (int i = 0; i < k; i++) {
    if (match_r[i] >= 0) continue;  // not a chain head
    std::vector<int> chain;
    for (int cur = i; cur >= 0; cur = match_l[cur]) chain.push_back(sep[cur]);
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
      return c.strictly_less(a, b);
    });
    for (size_t t = 0; t + 1 < chain.size(); t++)
      internal_check(c.strictly_less(chain[t], chain[t + 1]),
                     "chain cover produced a non-chain");
    emb.chains.push_back(std::move(chain));
  }

  std::vector<Bitset> chain_bits;
  for (const auto& ch : emb.chains) {
    Bitset b(c.num_halfspaces());
    for (int h : ch) b.set(h);
    chain_bits.push_back(std::move(b));
  }

  Interval iv = interval(c, x, y);
  emb.coord.assign(c.n, {});
  iv.verts.for_each([&](int v) {
    std::vector<int> co(emb.chains.size());
    for (size_t i = 0; i < emb.chains.size(); i++)
      co[i] = c.vertex_halfspaces[v].intersection_count(chain_bits[i]);
    emb.coord[v] = std::move(co);
  });
  return emb;
}

std::vector<int> interval_geodesic(const CubeComplex& c, int x, int y) {
  std::vector<int> path{x};
  int cur = x;
  while (cur != y) {
    int next = -1;
    for (int nb : c.adj[cur])
      if (c.dist(nb, y) == c.dist(cur, y) - 1 && (next < 0 || nb < next))
        next = nb;
    internal_check(next >= 0, "geodesic walk stuck short of its target");
    path.push_back(next);
    cur = next;
  }
  return path;
}

int directed_hausdorff(const CubeComplex& c, const Bitset& a,
                       const std::vector<int>& b) {
  int worst = 0;
  a.for_each([&](int v) {
    int best = INT_MAX;
    for (int u : b) best = std::min(best, c.dist(v, u));
    worst = std::max(worst, best);
  });
  return worst;
}

}  // namespace cubical
