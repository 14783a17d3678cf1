#include <doctest.h>

#include "cubical/complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "cubical/hyperbolicity.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace cubical;

TEST_CASE("four-point delta: trees are 0, the square is 1, grids grow") {
  for (const CubeComplex& t : suite::trees()) {
    CAPTURE(t.name);
    CHECK(delta_four_point_x2(t) == 0);
  }
  CHECK(delta_four_point_x2(gen_hypercube(2)) == 2);  // delta = 1
  int prev = -1;
  for (int m = 2; m <= 6; m++) {
    int dx2 = delta_four_point_x2(gen_grid(m, m), 2);
    CHECK(dx2 > prev);
    prev = dx2;
  }
}

TEST_CASE("delta is independent of the worker count") {
  CubeComplex s = gen_staircase(7);
  int one = delta_four_point_x2(s, 1);
  CHECK(one == delta_four_point_x2(s, 2));
  CHECK(one == delta_four_point_x2(s, 5));
}

TEST_CASE("dimension: clique size of the crossing graph") {
  CHECK(dimension(gen_tree(1, 1)) == 0);  // no hyperplanes at all
  CHECK(dimension(gen_tree(30, 3)) == 1);
  CHECK(dimension(gen_hypercube(3)) == 3);
  CHECK(dimension(gen_hypercube(6)) == 6);
  CHECK(dimension(gen_staircase(4)) == 2);
  for (int m = 1; m <= 4; m++) CHECK(dimension(gen_grid(m, 4)) == 2);
}

TEST_CASE("maximal grid equals naive subset search on small complexes") {
  for (const CubeComplex& c : suite::all()) {
    if (c.num_hyperplanes() > 12) continue;
    CAPTURE(c.name);
    CHECK(max_grid_size(c).first == oracle::naive_max_grid(c));
  }
}

TEST_CASE("maximal grid on the pinned families") {
  for (const CubeComplex& t : suite::trees()) {
    CAPTURE(t.name);
    auto [D, wit] = max_grid_size(t);
    CHECK(D == 0);
    CHECK(!wit.has_value());
  }
  for (int d = 2; d <= 6; d++) CHECK(max_grid_size(gen_hypercube(d)).first == 1);
  for (int m = 1; m <= 4; m++)
    for (int n = m; n <= 4; n++) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(max_grid_size(gen_grid(m, n)).first == std::min(m, n));
    }
  // staircases stabilize at 1 no matter the length
  CHECK(max_grid_size(gen_staircase(2)).first == 1);
  CHECK(max_grid_size(gen_staircase(6)).first == 1);
  CHECK(max_grid_size(gen_staircase(12)).first == 1);
}

TEST_CASE("witness grids check out") {
  for (const CubeComplex& c : suite::all()) {
    CAPTURE(c.name);
    auto [D, wit] = max_grid_size(c);
    if (D == 0) {
      CHECK(!wit.has_value());
      continue;
    }
    REQUIRE(wit.has_value());
    CHECK(int(wit->pencil_a.size()) == D);
    CHECK(int(wit->pencil_b.size()) == D);
    CHECK(wit->size == D);
    for (size_t i = 0; i + 1 < wit->pencil_a.size(); i++) {
      CHECK(c.strictly_less(wit->pencil_a[i], wit->pencil_a[i + 1]));
      CHECK(c.strictly_less(wit->pencil_b[i], wit->pencil_b[i + 1]));
    }
    for (int a : wit->pencil_a)
      for (int b : wit->pencil_b)
        CHECK(c.transverse(c.hs_hyperplane(a), c.hs_hyperplane(b)));
  }
}

TEST_CASE("geometry constants compose correctly") {
  CubeComplex s = gen_staircase(5);
  GeometryConstants g = geometry_constants(s);
  CHECK(g.dim_d == 2);
  CHECK(g.grid_D == 1);
  CHECK(g.delta_x2 == delta_four_point_x2(s));
  CHECK(g.theta_x2 == 2 * g.grid_D * g.dim_d + g.delta_x2);
  CHECK(g.R == 5 * g.grid_D * g.dim_d);
}

TEST_CASE("constants calculator: exact big-integer values") {
  StabilityConstants pc = stability_constants(2, 2, 1);
  CHECK(pc.L == 4);
  CHECK(pc.R == 10);
  CHECK(StabilityConstants::n2(4, 2) == 128);
  CHECK(pc.T == 4194304);
  CHECK(pc.K_log2 == 25);  // (2*1*2+1)^2
  REQUIRE(pc.K.has_value());
  CHECK(*pc.K == (mpz_class(1) << 25));
  CHECK(pc.M_over_K == mpz_class(4194304) * 9 * 2);
  REQUIRE(pc.M.has_value());
  CHECK(*pc.M == mpz_class("2533274790395904"));
  CHECK(pc.bounds(1000000));

  StabilityConstants z = stability_constants(1, 4, 0);
  CHECK(z.L == 2);
  CHECK(z.R == 0);
  CHECK(z.theta_x2 == 4);  // theta = delta when D = 0
  CHECK(z.T == 8);         // single application: N2(L=2, d=1) = 2^3
  REQUIRE(z.M.has_value());
  CHECK(*z.M == 16);  // 8 * (0+1)^2 * 1 * 2^((1)^1)
  CHECK(z.bounds(16));
  CHECK(!z.bounds(17));

  CHECK_THROWS_AS(stability_constants(0, 0, 0), Error);
  CHECK_THROWS_AS(stability_constants(1, -1, 0), Error);
  CHECK_THROWS_AS(stability_constants(1, 0, -1), Error);
}

TEST_CASE("huge exponents stay symbolic") {
  // d=6, D=1: cell exponent 13^6 is about 4.8 million, too big to expand
  StabilityConstants pc = stability_constants(6, 2, 1);
  CHECK(pc.K_log2 == mpz_class("4826809"));
  CHECK(!pc.K.has_value());
  CHECK(!pc.M.has_value());
  CHECK(pc.bounds(1'000'000'000));  // unmaterialized M certainly dominates
}
