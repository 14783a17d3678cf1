#include "cubical/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cubical/errors.hpp"
#include "cubical/rng.hpp"

namespace cubical {

CubeComplex gen_tree(int n, uint64_t seed) {
  if (n < 1) throw Error(Errc::BadArgument, "gen_tree: n must be >= 1", {n});
  std::string name = "tree-" + std::to_string(n) + "-s" + std::to_string(seed);
  if (n == 1) return build_complex(1, {}, name);
  if (n == 2) return build_complex(2, {{0, 1}}, name);

  Lcg64 rng{seed};
  std::vector<int> prufer(n - 2);
  for (int& s : prufer) s = static_cast<int>(rng.next_below(n));

  // Linear-time Prufer decode with a moving pointer over the smallest leaf.
  std::vector<int> deg(n, 1);
  for (int s : prufer) deg[s]++;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ptr++;
  int leaf = ptr;
  for (int s : prufer) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ptr++;
      while (deg[ptr] != 1) ptr++;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return build_complex(n, edges, name);
}

CubeComplex gen_hypercube(int d) {
  if (d < 1 || d > 12)
    throw Error(Errc::BadArgument, "gen_hypercube: d must be in [1,12]", {d});
  int n = 1 << d;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(d) << (d - 1));
  for (int v = 0; v < n; v++)
    for (int b = 0; b < d; b++)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return build_complex(n, edges, "Q" + std::to_string(d));
}

CubeComplex gen_grid(int m, int n) {
  if (m < 1 || n < 1)
    throw Error(Errc::BadArgument, "gen_grid: m,n must be >= 1", {m, n});
  auto id = [n](int i, int j) { return i * (n + 1) + j; };
  std::vector<Edge> edges;
  for (int i = 0; i <= m; i++)
    for (int j = 0; j <= n; j++) {
      if (i < m) edges.emplace_back(id(i, j), id(i + 1, j));
      if (j < n) edges.emplace_back(id(i, j), id(i, j + 1));
    }
  return build_complex((m + 1) * (n + 1), edges,
                       "grid-" + std::to_string(m) + "x" + std::to_string(n));
}

CubeComplex gen_staircase(int n) {
  if (n < 1)
    throw Error(Errc::BadArgument, "gen_staircase: n must be >= 1", {n});
  // Vertices (i,j) with |i-j| <= 1, numbered in lexicographic order.
  std::vector<std::vector<int>> id(n + 1, std::vector<int>(n + 1, -1));
  int count = 0;
  for (int i = 0; i <= n; i++)
    for (int j = std::max(0, i - 1); j <= std::min(n, i + 1); j++)
      id[i][j] = count++;
  std::vector<Edge> edges;
  for (int i = 0; i <= n; i++)
    for (int j = std::max(0, i - 1); j <= std::min(n, i + 1); j++) {
      if (i < n && id[i + 1][j] >= 0) edges.emplace_back(id[i][j], id[i + 1][j]);
      if (j < n && id[i][j + 1] >= 0) edges.emplace_back(id[i][j], id[i][j + 1]);
    }
  return build_complex(count, edges, "staircase-" + std::to_string(n));
}

namespace {

// Literal closure of a pocset spec: leq[a] = bitmask over literals b with
// a <= b (reflexive, transitively and involution closed).
std::vector<uint64_t> close_order(const PocsetSpec& spec, int w) {
  int lits = 2 * w;
  std::vector<uint64_t> leq(lits);
  for (int l = 0; l < lits; l++) leq[l] = 1ull << l;
  for (auto [a, b] : spec.order) {
    if (a < 0 || a >= lits || b < 0 || b >= lits)
      throw Error(Errc::BadArgument, "sageev_dual: order literal out of range",
                  {a, b});
    leq[a] |= 1ull << b;
    leq[b ^ 1] |= 1ull << (a ^ 1);
  }
  for (int k = 0; k < lits; k++)
    for (int l = 0; l < lits; l++)
      if (leq[l] & (1ull << k)) leq[l] |= leq[k];
  return leq;
}

}  // namespace

CubeComplex sageev_dual(const PocsetSpec& spec) {
  int w = static_cast<int>(spec.pairs.size());
  if (w > 20)
    throw Error(Errc::TooManyPairs, "sageev_dual: more than 20 pairs", {w});
  {
    std::vector<int> sorted = spec.pairs;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < w; i++)
      if (sorted[i] != i)
        throw Error(Errc::BadArgument,
                    "sageev_dual: pair ids must be 0..W-1", {sorted[i], i});
  }
  if (w == 0) return build_complex(1, {}, "dual-0");

  auto leq = close_order(spec, w);
  int lits = 2 * w;
  for (int l = 0; l < lits; l++) {
    if (leq[l] & (1ull << (l ^ 1)))
      throw Error(Errc::InconsistentSpec,
                  "sageev_dual: literal below its own complement", {l, l ^ 1});
    for (int m = l + 1; m < lits; m++)
      if ((leq[l] & (1ull << m)) && (leq[m] & (1ull << l)))
        throw Error(Errc::InconsistentSpec,
                    "sageev_dual: distinct literals forced equal", {l, m});
  }

  // Orientation = one literal per wall; bit i of the vertex mask means wall
  // i takes its positive literal 2i. Consistent iff upward closed.
  auto consistent = [&](uint32_t mask) {
    uint64_t chosen = 0;
    for (int i = 0; i < w; i++)
      chosen |= 1ull << (2 * i + ((mask >> i & 1) ? 0 : 1));
    uint64_t need = 0;
    for (int i = 0; i < w; i++) need |= leq[2 * i + ((mask >> i & 1) ? 0 : 1)];
    return (need & ~chosen) == 0;
  };

  std::vector<uint32_t> verts;
  for (uint32_t mask = 0; mask < (1u << w); mask++)
    if (consistent(mask)) verts.push_back(mask);
  internal_check(!verts.empty(), "pocset with no consistent orientation");

  if (spec.base) {
    const auto& base = *spec.base;
    if (static_cast<int>(base.size()) != w)
      throw Error(Errc::BadArgument, "sageev_dual: base has wrong length",
                  {static_cast<int>(base.size()), w});
    uint32_t bmask = 0;
    for (int i = 0; i < w; i++) {
      if (base[i] != 2 * i && base[i] != 2 * i + 1)
        throw Error(Errc::BadArgument,
                    "sageev_dual: base literal does not match its wall",
                    {base[i], i});
      if (base[i] == 2 * i) bmask |= 1u << i;
    }
    auto it = std::find(verts.begin(), verts.end(), bmask);
    if (it == verts.end())
      throw Error(Errc::InconsistentSpec,
                  "sageev_dual: base orientation is not consistent",
                  {static_cast<int>(bmask)});
    std::rotate(verts.begin(), it, it + 1);
  }

  std::unordered_map<uint32_t, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); i++) index[verts[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(verts.size()); i++)
    for (int b = 0; b < w; b++) {
      auto it = index.find(verts[i] ^ (1u << b));
      if (it != index.end() && it->second > i) edges.emplace_back(i, it->second);
    }
  return build_complex(static_cast<int>(verts.size()), edges,
                       "dual-" + std::to_string(w));
}

PocsetSpec pocset_of(const CubeComplex& c) {
  PocsetSpec spec;
  int h = static_cast<int>(c.hyperplanes.size());
  spec.pairs.resize(h);
  for (int i = 0; i < h; i++) spec.pairs[i] = i;
  int lits = 2 * h;
  for (int a = 0; a < lits; a++)
    for (int b = 0; b < lits; b++)
      if (a != b && (a ^ 1) != b && c.leq(a, b)) spec.order.emplace_back(a, b);
  std::vector<int> base(h);
  for (int i = 0; i < h; i++)
    base[i] = c.halfspaces[2 * i].verts.test(0) ? 2 * i : 2 * i + 1;
  spec.base = std::move(base);
  return spec;
}

}  // namespace cubical
