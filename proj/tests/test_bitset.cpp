#include <doctest.h>

#include <set>
#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/rng.hpp"

using cubical::Bitset;

TEST_CASE("bitset basics across the word boundary") {
  for (int n : {1, 63, 64, 65, 130}) {
    Bitset b(n);
    CHECK(b.none());
    CHECK(b.size() == n);
    b.set(0);
    b.set(n - 1);
    CHECK(b.test(0));
    CHECK(b.test(n - 1));
    CHECK(b.count() == (n == 1 ? 1 : 2));
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(0) == (n == 1 ? -1 : n - 1));
    b.reset(0);
    CHECK(!b.test(0));
    CHECK(Bitset::ones(n).count() == n);
    CHECK((~Bitset(n)).count() == n);
  }
}

TEST_CASE("bitset algebra agrees with std::set") {
  cubical::Lcg64 rng(42);
  for (int trial = 0; trial < 50; trial++) {
    int n = 1 + rng.next_below(150);
    Bitset a(n), b(n);
    std::set<int> sa, sb;
    for (int i = 0; i < n; i++) {
      if (rng.next_below(2)) {
        a.set(i);
        sa.insert(i);
      }
      if (rng.next_below(2)) {
        b.set(i);
        sb.insert(i);
      }
    }
    std::set<int> si, su, sx, sd;
    for (int i = 0; i < n; i++) {
      bool ia = sa.count(i), ib = sb.count(i);
      if (ia && ib) si.insert(i);
      if (ia || ib) su.insert(i);
      if (ia != ib) sx.insert(i);
      if (ia && !ib) sd.insert(i);
    }
    auto as_set = [](const Bitset& x) {
      auto v = x.to_vector();
      return std::set<int>(v.begin(), v.end());
    };
    CHECK(as_set(a & b) == si);
    CHECK(as_set(a | b) == su);
    CHECK(as_set(a ^ b) == sx);
    Bitset d = a;
    d.and_not(b);
    CHECK(as_set(d) == sd);
    CHECK(a.intersection_count(b) == int(si.size()));
    CHECK(a.xor_count(b) == int(sx.size()));
    CHECK(a.intersects(b) == !si.empty());
    CHECK(d.subset_of(a));
    CHECK((a & b).subset_of(a));
    CHECK(as_set(~a).size() == n - sa.size());
    int seen = 0;
    a.for_each([&](int i) {
      CHECK(sa.count(i));
      seen++;
    });
    CHECK(seen == int(sa.size()));
  }
}

TEST_CASE("bitset ordering and printing") {
  Bitset a(70), b(70);
  a.set(3);
  b.set(3);
  CHECK(a == b);
  b.set(69);
  CHECK(a != b);
  CHECK(a < b);
  Bitset c(5);
  c.set(0);
  c.set(2);
  c.set(4);
  CHECK(c.str() == "{0,2,4}");
  CHECK(Bitset(5).str() == "{}");
}
