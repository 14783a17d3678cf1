#include "cubical/stability.hpp"

#include <algorithm>

#include "cubical/cylinders.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperbolicity.hpp"
#include "cubical/intervals.hpp"
#include "cubical/rng.hpp"

namespace cubical {

namespace {

// Everything the triple check needs about one unordered pair, precomputed
// once: the cylinder, its defining halfspaces, the interval gate map, and
// per defining halfspace the farthest projection distance from each end.
struct ProjEntry {
  int hs;
  int dmax_a, dmax_b;
};

struct PairCtx {
  int a = 0, b = 0;
  Bitset defining;  // over halfspaces
  Bitset cyl;       // over vertices
  std::vector<int16_t> gate;
  std::vector<ProjEntry> projs;  // ascending hs, parallel to defining
};

PairCtx build_ctx(const CubeComplex& c, int a, int b, int D) {
  PairCtx ctx;
  ctx.a = a;
  ctx.b = b;
  Cylinder cyl = cylinder(c, a, b, D);
  ctx.defining = std::move(cyl.defining);
  ctx.cyl = std::move(cyl.verts);
  Interval iv = interval(c, a, b);
  ctx.gate.resize(c.n);
  for (int v = 0; v < c.n; v++) ctx.gate[v] = int16_t(iv.gate[v]);
  const int32_t* da = c.dist_row(a);
  const int32_t* db = c.dist_row(b);
  ctx.defining.for_each([&](int h) {
    int dmax_a = 0, dmax_b = 0;
    c.hverts(h).for_each([&](int v) {
      int g = iv.gate[v];
      dmax_a = std::max(dmax_a, int(da[g]));
      dmax_b = std::max(dmax_b, int(db[g]));
    });
    ctx.projs.push_back({h, dmax_a, dmax_b});
  });
  return ctx;
}

// gate image of halfspace hs, as a vertex set.
Bitset proj_of(const CubeComplex& c, const PairCtx& ctx, int hs) {
  Bitset r(c.n);
  c.hverts(hs).for_each([&](int v) { r.set(ctx.gate[v]); });
  return r;
}

// Defining halfspaces of cxy whose projection stays strictly below thr2
// (doubled) from base, minus the defining set of cxz.
template <class F>
void diff_family(const PairCtx& cxy, int base, const PairCtx& cxz, int thr2,
                 F&& fn) {
  bool from_a = base == cxy.a;
  for (const ProjEntry& e : cxy.projs) {
    int dmax = from_a ? e.dmax_a : e.dmax_b;
    if (2 * dmax < thr2 && !cxz.defining.test(e.hs)) fn(e.hs);
  }
}

Bitset centers_core(const CubeComplex& c, const PairCtx& cxy,
                    const PairCtx& cxz, int x, int m, int rho2, int Dd) {
  Bitset p(c.n);
  p.set(m);
  int thr2 = rho2 + 2 * Dd;
  diff_family(cxy, x, cxz, thr2, [&](int h) { p |= proj_of(c, cxy, h); });
  diff_family(cxz, x, cxy, thr2, [&](int h) { p |= proj_of(c, cxz, h); });
  return p;
}

int proj_diff_core(const CubeComplex& c, const PairCtx& cxy, const PairCtx& cxz,
                   int x, int rho2, int Dd) {
  std::vector<Bitset> sets;
  diff_family(cxy, x, cxz, rho2 - 2 * Dd,
              [&](int h) { sets.push_back(proj_of(c, cxy, h)); });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return int(sets.size());
}

// Closed-ball rows per vertex, radius-indexed; radii clamp to the
// eccentricity (everything) beyond it.
struct BallTable {
  std::vector<std::vector<Bitset>> rows;

  explicit BallTable(const CubeComplex& c) : rows(c.n) {
    for (int v = 0; v < c.n; v++) {
      const int32_t* dv = c.dist_row(v);
      int ecc = 0;
      for (int u = 0; u < c.n; u++) ecc = std::max(ecc, int(dv[u]));
      rows[v].assign(ecc + 1, Bitset(c.n));
      for (int u = 0; u < c.n; u++) rows[v][dv[u]].set(u);
      for (int r = 1; r <= ecc; r++) rows[v][r] |= rows[v][r - 1];
    }
  }

  const Bitset& get(int v, int r) const {
    const auto& row = rows[v];
    return row[std::min<size_t>(std::max(r, 0), row.size() - 1)];
  }
};

TripleReport triple_core(const CubeComplex& c, const PairCtx& cxy,
                         const PairCtx& cxz, int x, int y, int z, int Dd,
                         int R, const BallTable& balls) {
  TripleReport rep;
  rep.x = x;
  rep.y = y;
  rep.z = z;
  rep.R_used = R;
  rep.rho2 = c.dist(x, y) + c.dist(x, z) - c.dist(y, z);
  internal_check(rep.rho2 % 2 == 0, "odd doubled Gromov product");
  int m = cxy.gate[z];

  const Bitset& ball = balls.get(x, rep.rho2 / 2);
  Bitset sym = cxy.cyl & ball;
  sym ^= cxz.cyl & ball;
  rep.sym_diff_size = sym.count();

  Bitset p = centers_core(c, cxy, cxz, x, m, rep.rho2, Dd);
  rep.witness_centers = p.to_vector();
  if (!sym.any()) return rep;

  std::vector<Bitset> cover;
  Bitset remaining = sym;
  p.for_each([&](int pt) {
    Bitset cb = balls.get(pt, R) & sym;
    if (cb.any()) {
      remaining.and_not(cb);
      cover.push_back(std::move(cb));
    }
  });
  rep.covered = remaining.none();

  // Greedy subcover of the coverable part: biggest gain first, earliest
  // (smallest) center on ties.
  Bitset todo = sym;
  todo.and_not(remaining);
  int k = 0;
  while (todo.any()) {
    size_t best = 0;
    int best_gain = 0;
    for (size_t i = 0; i < cover.size(); i++) {
      int gain = cover[i].intersection_count(todo);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    internal_check(best_gain > 0, "greedy cover stalled on coverable set");
    todo.and_not(cover[best]);
    k++;
  }
  rep.empirical_k = k;
  return rep;
}

}  // namespace

Bitset truncated_sym_diff(const CubeComplex& c, int x, int y, int z, int D) {
  int rho2 = c.dist(x, y) + c.dist(x, z) - c.dist(y, z);
  Bitset ball(c.n);
  const int32_t* dx = c.dist_row(x);
  for (int v = 0; v < c.n; v++)
    if (2 * dx[v] <= rho2) ball.set(v);
  Bitset sym = cylinder(c, x, y, D).verts & ball;
  sym ^= cylinder(c, x, z, D).verts & ball;
  return sym;
}

std::vector<int> witness_centers(const CubeComplex& c, int x, int y, int z,
                                 int D) {
  PairCtx cxy = build_ctx(c, x, y, D);
  PairCtx cxz = build_ctx(c, x, z, D);
  int rho2 = c.dist(x, y) + c.dist(x, z) - c.dist(y, z);
  int Dd = D * dimension(c);
  return centers_core(c, cxy, cxz, x, cxy.gate[z], rho2, Dd).to_vector();
}

TripleReport check_triple(const CubeComplex& c, int x, int y, int z, int D,
                          int R) {
  int Dd = D * dimension(c);
  if (R < 0) R = 5 * Dd;
  PairCtx cxy = build_ctx(c, x, y, D);
  PairCtx cxz = build_ctx(c, x, z, D);
  BallTable balls(c);
  return triple_core(c, cxy, cxz, x, y, z, Dd, R, balls);
}

int projection_difference_count(const CubeComplex& c, int x, int y, int z,
                                int D) {
  PairCtx cxy = build_ctx(c, x, y, D);
  PairCtx cxz = build_ctx(c, x, z, D);
  int rho2 = c.dist(x, y) + c.dist(x, z) - c.dist(y, z);
  return proj_diff_core(c, cxy, cxz, x, rho2, D * dimension(c));
}

SweepReport stability_sweep(const CubeComplex& c, int D, int R, SweepMode mode,
                            int threads) {
  SweepReport rep;
  rep.complex_name = c.name;
  rep.delta_x2 = delta_four_point_x2(c, threads);
  rep.dim_d = dimension(c);
  rep.D = D >= 0 ? D : max_grid_size(c).first;
  int Dd = rep.D * rep.dim_d;
  rep.R = R >= 0 ? R : 5 * Dd;
  rep.mode = mode.samples > 0 ? "sample" : "all";
  rep.sample_count = mode.samples;
  rep.seed = mode.samples > 0 ? mode.seed : 0;

  int n = c.n;
  // Pair contexts for every unordered pair (diagonal included).
  auto pidx = [n](int a, int b) {
    return size_t(a) * n - size_t(a) * (a - 1) / 2 + size_t(b - a);
  };
  std::vector<PairCtx> ctx(pidx(n - 1, n - 1) + 1);
  parallel_chunks(long(ctx.size()), threads, [&](long lo, long hi) {
    // recover (a,b) from the flat index by walking rows
    long i = 0;
    for (int a = 0; a < n; a++) {
      long row = n - a;
      if (i + row <= lo) {
        i += row;
        continue;
      }
      for (int b = a; b < n; b++) {
        long at = long(pidx(a, b));
        if (at >= lo && at < hi) ctx[at] = build_ctx(c, a, b, rep.D);
      }
      i += row;
      if (i >= hi) break;
    }
  });

  BallTable balls(c);

  // Sampled triples are drawn sequentially up front so the schedule of
  // workers cannot change them.
  std::vector<int> sampled;
  long total;
  if (mode.samples > 0) {
    Lcg64 rng{mode.seed};
    sampled.reserve(size_t(mode.samples) * 3);
    for (long i = 0; i < mode.samples; i++) {
      sampled.push_back(rng.next_below(n));
      sampled.push_back(rng.next_below(n));
      sampled.push_back(rng.next_below(n));
    }
    total = mode.samples;
  } else {
    total = long(n) * n * n;
  }
  rep.triples_checked = total;

  struct Slot {
    int16_t k = 0;
    int16_t pd = 0;
    bool covered = true;
  };
  std::vector<Slot> slots(static_cast<size_t>(total));

  parallel_chunks(total, threads, [&](long lo, long hi) {
    for (long t = lo; t < hi; t++) {
      int x, y, z;
      if (mode.samples > 0) {
        x = sampled[size_t(t) * 3];
        y = sampled[size_t(t) * 3 + 1];
        z = sampled[size_t(t) * 3 + 2];
      } else {
        x = int(t / (long(n) * n));
        y = int(t / n % n);
        z = int(t % n);
      }
      const PairCtx& cxy = ctx[pidx(std::min(x, y), std::max(x, y))];
      const PairCtx& cxz = ctx[pidx(std::min(x, z), std::max(x, z))];
      TripleReport tr = triple_core(c, cxy, cxz, x, y, z, Dd, rep.R, balls);
      int rho2 = tr.rho2;
      slots[size_t(t)] = {int16_t(tr.empirical_k),
                          int16_t(proj_diff_core(c, cxy, cxz, x, rho2, Dd)),
                          tr.covered};
    }
  });

  for (long t = 0; t < total; t++) {
    const Slot& s = slots[size_t(t)];
    if (s.covered)
      rep.max_empirical_k = std::max(rep.max_empirical_k, int(s.k));
    rep.max_projection_difference =
        std::max(rep.max_projection_difference, int(s.pd));
    if (!s.covered) {
      int x, y, z;
      if (mode.samples > 0) {
        x = sampled[size_t(t) * 3];
        y = sampled[size_t(t) * 3 + 1];
        z = sampled[size_t(t) * 3 + 2];
      } else {
        x = int(t / (long(n) * n));
        y = int(t / n % n);
        z = int(t % n);
      }
      const PairCtx& cxy = ctx[pidx(std::min(x, y), std::max(x, y))];
      const PairCtx& cxz = ctx[pidx(std::min(x, z), std::max(x, z))];
      rep.failures.push_back(
          triple_core(c, cxy, cxz, x, y, z, Dd, rep.R, balls));
    }
  }
  return rep;
}

bool check_invariance(const CubeComplex& c, const std::vector<int>& perm,
                      int D, const std::vector<Edge>& pairs) {
  if (int(perm.size()) != c.n)
    throw Error(Errc::NotAutomorphism, "permutation has wrong length",
                {int(perm.size()), c.n});
  std::vector<char> seen(c.n, 0);
  for (int v = 0; v < c.n; v++) {
    if (perm[v] < 0 || perm[v] >= c.n || seen[perm[v]])
      throw Error(Errc::NotAutomorphism, "not a permutation", {v, perm[v]});
    seen[perm[v]] = 1;
  }
  for (const Edge& e : c.edges) {
    int u = perm[e.first], v = perm[e.second];
    if (u > v) std::swap(u, v);
    if (!std::binary_search(c.edges.begin(), c.edges.end(), Edge{u, v}))
      throw Error(Errc::NotAutomorphism, "image of an edge is not an edge",
                  {e.first, e.second});
  }

  if (D < 0) D = max_grid_size(c).first;
  std::vector<Edge> all;
  const std::vector<Edge>* use = &pairs;
  if (pairs.empty()) {
    for (int a = 0; a < c.n; a++)
      for (int b = a; b < c.n; b++) all.emplace_back(a, b);
    use = &all;
  }
  for (const Edge& pr : *use) {
    Bitset image(c.n);
    cylinder(c, pr.first, pr.second, D).verts.for_each([&](int v) {
      image.set(perm[v]);
    });
    if (!(image == cylinder(c, perm[pr.first], perm[pr.second], D).verts))
      return false;
  }
  return true;
}

}  // namespace cubical
