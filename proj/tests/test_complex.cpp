#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubical/complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace cubical;

TEST_CASE("median validation accepts the zoo and distances match plain BFS") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    auto d = oracle::bfs_all(c.n, c.edges);
    for (int u = 0; u < c.n; u++)
      for (int v = 0; v < c.n; v++) REQUIRE(c.dist(u, v) == d[u][v]);
  }
}

TEST_CASE("exactly one median per triple, by the oracle") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    auto d = oracle::bfs_all(c.n, c.edges);
    for (int x = 0; x < c.n; x++)
      for (int y = x; y < c.n; y++)
        for (int z = y; z < c.n; z++)
          REQUIRE(oracle::median_count(d, x, y, z) == 1);
  }
}

TEST_CASE("non-median and malformed inputs are rejected") {
  std::vector<Edge> c5 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  CHECK_THROWS_AS(build_complex(5, c5), Error);
  try {
    build_complex(5, c5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMedian);
  }

  // K4 minus an edge: 4-cycle plus diagonal; the diagonal breaks medians
  std::vector<Edge> k4m = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  CHECK_THROWS_AS(build_complex(4, k4m), Error);

  std::vector<Edge> disc = {{0, 1}, {2, 3}};
  try {
    build_complex(4, disc);
    FAIL("disconnected accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }

  for (auto bad : std::vector<std::vector<Edge>>{
           {{0, 0}}, {{0, 2}}, {{-1, 0}}, {{0, 1}, {1, 0}}}) {
    try {
      build_complex(2, bad);
      FAIL("malformed edge accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MalformedEdge);
    }
  }
}

TEST_CASE("hyperplane classes equal Djokovic-Winkler classes") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    CHECK(oracle::lib_classes(c) == oracle::dw_classes(c.n, c.edges));
  }
}

TEST_CASE("hyperplane counts on the standard examples") {
  CHECK(suite::path(3).num_hyperplanes() == 2);
  CHECK(suite::path(3).num_halfspaces() == 4);
  CHECK(gen_hypercube(2).num_hyperplanes() == 2);
  CHECK(gen_hypercube(3).num_hyperplanes() == 3);

  // 2x1 grid: classes of sizes {2,2,3} sorted
  CubeComplex g = gen_grid(2, 1);
  std::multiset<int> sizes;
  for (const auto& hp : g.hyperplanes) sizes.insert(int(hp.edge_class.size()));
  CHECK(sizes == std::multiset<int>({2, 2, 3}));
}

TEST_CASE("halfspace pairing, sides, and the wall metric") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    for (int h = 0; h < c.num_halfspaces(); h += 2) {
      const Bitset& pos = c.hverts(h);
      const Bitset& neg = c.hverts(h ^ 1);
      CHECK(!pos.intersects(neg));
      CHECK((pos | neg).count() == c.n);
      CHECK(pos.any());
      CHECK(neg.any());
    }
    for (int u = 0; u < c.n; u++) {
      CHECK(int(c.vertex_halfspaces[u].count()) == c.num_hyperplanes());
      for (int v = u; v < c.n; v++)
        CHECK(c.vertex_halfspaces[u].xor_count(c.vertex_halfspaces[v]) ==
              2 * c.dist(u, v));
    }
  }
}

TEST_CASE("pocset relations: exactly one of five, transversality is symmetric") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    int H = c.num_halfspaces();
    for (int a = 0; a < H; a += 2)
      for (int b = a + 2; b < H; b += 2) {
        int rel = 0;
        if (c.leq(a, b) || c.leq(b, a)) rel++;
        if (c.leq(a, b ^ 1) || c.leq(b ^ 1, a)) rel++;
        if (c.leq(a ^ 1, b) || c.leq(b, a ^ 1)) rel++;
        if (c.leq(a ^ 1, b ^ 1) || c.leq(b ^ 1, a ^ 1)) rel++;
        bool tv = c.transverse(a >> 1, b >> 1);
        CHECK(c.transverse(b >> 1, a >> 1) == tv);
        if (tv)
          CHECK(rel == 0);
        else
          CHECK(rel >= 1);
        // nesting as sets matches the stored relation
        CHECK(c.leq(a, b) == c.hverts(a).subset_of(c.hverts(b)));
      }
  }
}

TEST_CASE("halfspaces are convex") {
  for (const CubeComplex& c : suite::all()) {
    if (c.n > 40) continue;
    CAPTURE(c.name);
    for (int h = 0; h < c.num_halfspaces(); h++) {
      const Bitset& hv = c.hverts(h);
      hv.for_each([&](int u) {
        hv.for_each([&](int v) {
          for (int w = 0; w < c.n; w++)
            if (c.dist(u, w) + c.dist(w, v) == c.dist(u, v))
              CHECK(hv.test(w));
        });
      });
    }
  }
}
