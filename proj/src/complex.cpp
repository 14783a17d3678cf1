#include "cubical/complex.hpp"

#include <algorithm>
#include <queue>

namespace cubical {

namespace {

void check_edges(int n, std::vector<Edge>& edges) {
  if (n < 1) throw Error(Errc::BadArgument, "vertex count must be >= 1");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::MalformedEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") references a vertex outside 0.." + std::to_string(n - 1),
                  {u, v, -1});
    if (u == v)
      throw Error(Errc::MalformedEdge, "loop at vertex " + std::to_string(u),
                  {u, v, -1});
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw Error(Errc::MalformedEdge,
                "duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")",
                {dup->first, dup->second, -1});
}

void bfs(const std::vector<std::vector<int>>& adj, int src, int32_t* out) {
  int n = int(adj.size());
  std::fill(out, out + n, int32_t(-1));
  std::queue<int> q;
  out[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (out[w] < 0) {
        out[w] = out[u] + 1;
        q.push(w);
      }
  }
}

// Exhaustive median check over all vertex triples, using per-pair interval
// bitsets. Trees skip it: connected with n-1 edges implies median.
void check_median(const CubeComplex& c) {
  int n = c.n;
  if (int(c.edges.size()) == n - 1) return;  // tree
  auto pair_index = [n](int x, int y) {
    return size_t(x) * n - size_t(x) * (x + 1) / 2 + size_t(y - x - 1);
  };
  std::vector<Bitset> interval(size_t(n) * (n - 1) / 2);
  for (int x = 0; x < n; ++x) {
    const int32_t* dx = c.dist_row(x);
    for (int y = x + 1; y < n; ++y) {
      const int32_t* dy = c.dist_row(y);
      Bitset b(n);
      int dxy = dx[y];
      for (int z = 0; z < n; ++z)
        if (dx[z] + dy[z] == dxy) b.set(z);
      interval[pair_index(x, y)] = std::move(b);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const Bitset& ixy = interval[pair_index(x, y)];
      for (int z = y + 1; z < n; ++z) {
        Bitset m = ixy;
        m &= interval[pair_index(x, z)];
        m &= interval[pair_index(y, z)];
        int cnt = m.count();
        if (cnt != 1)
          throw Error(Errc::NotMedian,
                      "triple (" + std::to_string(x) + "," + std::to_string(y) +
                          "," + std::to_string(z) + ") has " +
                          std::to_string(cnt) + " medians",
                      {x, y, z});
      }
    }
}

void extract_hyperplanes(CubeComplex& c) {
  int n = c.n;
  std::vector<char> done(c.edges.size(), 0);
  for (size_t ei = 0; ei < c.edges.size(); ++ei) {
    if (done[ei]) continue;
    auto [u, v] = c.edges[ei];
    Bitset side_u(n), side_v(n);
    for (int w = 0; w < n; ++w) {
      int du = c.dist(w, u), dv = c.dist(w, v);
      if (du == dv)
        throw Error(Errc::SeparationFailure,
                    "vertex " + std::to_string(w) + " equidistant from edge (" +
                        std::to_string(u) + "," + std::to_string(v) + ")");
      (du < dv ? side_u : side_v).set(w);
    }

    Hyperplane h;
    h.id = c.num_hyperplanes();
    for (size_t fj = 0; fj < c.edges.size(); ++fj) {
      auto [a, b] = c.edges[fj];
      if (side_u.test(a) != side_u.test(b)) {
        if (done[fj])
          throw Error(Errc::SeparationFailure,
                      "edge classes overlap at edge (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
        done[fj] = 1;
        h.edge_class.push_back(c.edges[fj]);
      }
    }

    // Each side must stay connected once the class is removed: exactly two
    // components.
    for (const Bitset* side : {&side_u, &side_v}) {
      int start = side->find_first();
      Bitset seen(n);
      seen.set(start);
      std::queue<int> q;
      q.push(start);
      int reached = 1;
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : c.adj[a])
          if (side->test(b) && !seen.test(b)) {
            seen.set(b);
            ++reached;
            q.push(b);
          }
      }
      if (reached != side->count())
        throw Error(Errc::SeparationFailure,
                    "halfspace of edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") is disconnected");
    }

    Halfspace hu, hv;
    hu.id = 2 * h.id;
    hv.id = 2 * h.id + 1;
    hu.complement = hv.id;
    hv.complement = hu.id;
    hu.hyperplane = hv.hyperplane = h.id;
    hu.verts = std::move(side_u);
    hv.verts = std::move(side_v);
    h.sides = {hu.id, hv.id};
    c.hyperplanes.push_back(std::move(h));
    c.halfspaces.push_back(std::move(hu));
    c.halfspaces.push_back(std::move(hv));
  }
}

// Gatedness, operationalized as: the nearest vertex of every halfspace to
// every outside vertex is unique.
void check_gated(const CubeComplex& c) {
  for (const Halfspace& h : c.halfspaces) {
    std::vector<int> members = h.verts.to_vector();
    for (int v = 0; v < c.n; ++v) {
      if (h.verts.test(v)) continue;
      const int32_t* dv = c.dist_row(v);
      int best = INT32_MAX, ties = 0;
      for (int m : members) {
        if (dv[m] < best) {
          best = dv[m];
          ties = 1;
        } else if (dv[m] == best) {
          ++ties;
        }
      }
      if (ties != 1)
        throw Error(Errc::SeparationFailure,
                    "halfspace " + std::to_string(h.id) +
                        " has no unique gate for vertex " + std::to_string(v));
    }
  }
}

void build_relations(CubeComplex& c) {
  int nhs = c.num_halfspaces();
  int nh = c.num_hyperplanes();
  c.rel.leq.assign(size_t(nhs), Bitset(nhs));
  for (int a = 0; a < nhs; ++a)
    for (int b = 0; b < nhs; ++b)
      if (c.hverts(a).subset_of(c.hverts(b))) c.rel.leq[size_t(a)].set(b);

  c.rel.transverse.assign(size_t(nh), Bitset(nh));
  for (int i = 0; i < nh; ++i) {
    const Bitset& hi = c.hverts(2 * i);
    const Bitset& hi_c = c.hverts(2 * i + 1);
    for (int j = i + 1; j < nh; ++j) {
      const Bitset& hj = c.hverts(2 * j);
      const Bitset& hj_c = c.hverts(2 * j + 1);
      if (hi.intersects(hj) && hi.intersects(hj_c) && hi_c.intersects(hj) &&
          hi_c.intersects(hj_c)) {
        c.rel.transverse[size_t(i)].set(j);
        c.rel.transverse[size_t(j)].set(i);
      }
    }
  }

  // Distinct hyperplanes must be in exactly one relation: transverse or one
  // of the four nesting orientations.
  for (int i = 0; i < nh; ++i)
    for (int j = i + 1; j < nh; ++j) {
      int cnt = c.transverse(i, j) ? 1 : 0;
      cnt += c.leq(2 * i, 2 * j) + c.leq(2 * i, 2 * j + 1) +
             c.leq(2 * i + 1, 2 * j) + c.leq(2 * i + 1, 2 * j + 1);
      if (cnt != 1)
        throw Error(Errc::SeparationFailure,
                    "hyperplanes " + std::to_string(i) + "," +
                        std::to_string(j) + " are in " + std::to_string(cnt) +
                        " pocset relations");
    }

  c.rel.crossing_halfspaces.assign(size_t(nh), Bitset(nhs));
  for (int i = 0; i < nh; ++i)
    for (int b = 0; b < nhs; ++b)
      if (c.transverse(i, b >> 1)) c.rel.crossing_halfspaces[size_t(i)].set(b);

  c.vertex_halfspaces.assign(size_t(c.n), Bitset(nhs));
  for (int hs = 0; hs < nhs; ++hs)
    c.hverts(hs).for_each([&](int v) { c.vertex_halfspaces[size_t(v)].set(hs); });

  // Wall metric equals graph metric: d(u,v) = number of separating
  // hyperplanes, i.e. half the sigma xor count.
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v)
      if (c.vertex_halfspaces[size_t(u)].xor_count(c.vertex_halfspaces[size_t(v)]) !=
          2 * c.dist(u, v))
        throw Error(Errc::SeparationFailure,
                    "wall metric differs from graph metric at (" +
                        std::to_string(u) + "," + std::to_string(v) + ")");
}

}  // namespace

CubeComplex build_complex(int n, std::vector<Edge> edges, std::string name) {
  check_edges(n, edges);

  CubeComplex c;
  c.n = n;
  c.name = std::move(name);
  c.edges = std::move(edges);
  c.adj.assign(size_t(n), {});
  for (auto [u, v] : c.edges) {
    c.adj[size_t(u)].push_back(v);
    c.adj[size_t(v)].push_back(u);
  }

  c.dist_.resize(size_t(n) * n);
  for (int v = 0; v < n; ++v) bfs(c.adj, v, c.dist_.data() + size_t(v) * n);
  for (int v = 0; v < n; ++v)
    if (c.dist(0, v) < 0)
      throw Error(Errc::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from 0", {v, -1, -1});

  check_median(c);
  extract_hyperplanes(c);
  check_gated(c);
  build_relations(c);
  return c;
}

}  // namespace cubical
