#include <doctest.h>

#include <algorithm>
#include <bit>

#include "brute.hpp"
#include "geostream/hardness.hpp"
#include "geostream/oracle.hpp"

using namespace geostream;
using namespace geostream::testing;

namespace {

Interval iv(long a, long b) { return Interval(Coord(a), Coord(b)); }

std::vector<Object> intervals(std::initializer_list<std::pair<long, long>> items) {
  std::vector<Object> out;
  for (auto [a, b] : items) out.push_back(iv(a, b));
  return out;
}

}  // namespace

TEST_CASE("intersection graphs") {
  const AdjacencyMatrix zero = intersection_graph(intervals({{1, 2}, {3, 4}}));
  CHECK(zero.edge_count() == 0);
  CHECK(zero.kind == ObjectKind::interval);

  const ObjectStream no = segments_from_disjointness(gen_disjointness(16, 2, 0, 1));
  const AdjacencyMatrix k = intersection_graph(no);
  CHECK(k.edge_count() == k.n * (k.n - 1) / 2);
  for (int v = 0; v < k.n; ++v) CHECK_FALSE(k.at(v, v));

  const ObjectStream chain = two_intervals_from_chain(gen_chain(4, 2, 1, 3));
  const AdjacencyMatrix g = intersection_graph(chain);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      CHECK(g.at(u, v) == (u != v && intersects(chain[u], chain[v])));
}

TEST_CASE("intersection graph preconditions") {
  std::vector<Object> many;
  for (long k = 0; k < 65; ++k) many.push_back(iv(k, k));
  CHECK_THROWS_AS(intersection_graph(many), CapExceeded);
  many.pop_back();
  CHECK_NOTHROW(intersection_graph(many));
  CHECK_THROWS_AS(intersection_graph(many, 10), CapExceeded);

  std::vector<Object> mixed = intervals({{1, 2}});
  mixed.push_back(PermSegment{1, 2});
  CHECK_THROWS_AS(intersection_graph(mixed), std::invalid_argument);
}

TEST_CASE("independent sets on fixed inputs") {
  const auto disjoint = intersection_graph(intervals({{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  const OracleResult r = max_independent_set(disjoint);
  CHECK(r.size == 4);
  CHECK(r.witness == std::vector{0, 1, 2, 3});

  const DisjInstance d = gen_disjointness(8, 2, 1, 2);
  const ObjectStream s = segments_from_disjointness(d);
  const int jstar = *d.full_column();
  std::vector<int> expected;
  const auto segs = s.as<PermSegment>();
  for (int v = 0; v < static_cast<int>(segs.size()); ++v) {
    // Slot-independent: the group index is recoverable from the top x.
    if ((segs[v].top_x.numerator().get_si() - 1) / 2 + 1 == jstar) expected.push_back(v);
  }
  const OracleResult seg = max_independent_set(s);
  CHECK(seg.size == 2);
  CHECK(seg.witness == expected);
}

TEST_CASE("cliques on fixed inputs") {
  const OracleResult nested = max_clique(intersection_graph(intervals({{1, 10}, {2, 9}, {3, 8}, {4, 7}})));
  CHECK(nested.size == 4);
  CHECK(nested.witness == std::vector{0, 1, 2, 3});

  const OracleResult depth = max_clique(intersection_graph(intervals({{1, 3}, {2, 5}, {4, 5}})));
  CHECK(depth.size == 2);
  CHECK(depth.witness == std::vector{0, 1});

  const DisjInstance d = gen_disjointness(24, 4, 1, 5);
  const ObjectStream s = clique_segments_from_disjointness(d);
  const OracleResult c = max_clique(s);
  CHECK(c.size == 4);
  const auto segs = s.as<PermSegment>();
  for (int v : c.witness) {
    CHECK((segs[v].top_x.numerator().get_si() - 1) / 4 + 1 == *d.full_column());
  }
}

TEST_CASE("empty and single-vertex graphs") {
  const AdjacencyMatrix empty(0);
  CHECK(max_independent_set(empty).size == 0);
  CHECK(max_clique(empty).size == 0);
  const AdjacencyMatrix one(1);
  CHECK(max_independent_set(one).witness == std::vector{0});
  CHECK(max_clique(one).witness == std::vector{0});
}

TEST_CASE("witnesses are valid, maximal and lexicographically first") {
  Rng rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.between(1, 14));
    const AdjacencyMatrix g = random_graph(rng, n, static_cast<int>(rng.between(10, 90)));
    const OracleResult r = max_independent_set(g);
    REQUIRE(is_independent(g, r.witness));
    REQUIRE(static_cast<int>(r.witness.size()) == r.size);
    for (int v = 0; v < n; ++v) {
      if (std::find(r.witness.begin(), r.witness.end(), v) != r.witness.end()) continue;
      auto bigger = r.witness;
      bigger.push_back(v);
      REQUIRE_FALSE(is_independent(g, bigger));
    }
    REQUIRE(r.witness == exhaustive_lex_mis(g));
    const OracleResult c = max_clique(g);
    REQUIRE(is_clique(g, c.witness));
    REQUIRE(c.size == static_cast<int>(c.witness.size()));
  }
}

TEST_CASE("clique equals independence on the complement") {
  Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.between(1, 20));
    const AdjacencyMatrix g = random_graph(rng, n, static_cast<int>(rng.between(5, 95)));
    REQUIRE(clique_number(g) == independence_number(g.complement()));
    REQUIRE(max_clique(g).size == max_independent_set(g.complement()).size);
    REQUIRE(g.complement().complement() == g);
  }
}

TEST_CASE("interval cliques equal the deepest endpoint") {
  Rng rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Object> objs;
    std::vector<Interval> ivs;
    const int n = static_cast<int>(rng.between(1, 20));
    for (int k = 0; k < n; ++k) {
      ivs.push_back(random_interval(rng, 0, 25));
      objs.push_back(ivs.back());
    }
    int depth = 0;
    for (const auto& p : ivs) {
      for (const Coord& x : {p.lo, p.hi}) {
        depth = std::max<int>(depth, static_cast<int>(std::count_if(
                                         ivs.begin(), ivs.end(), [&x](const Interval& i) { return i.contains(x); })));
      }
    }
    REQUIRE(clique_number(intersection_graph(objs)) == depth);
  }
}

TEST_CASE("branch and bound equals subset enumeration") {
  Rng rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.between(1, 15));
    const AdjacencyMatrix g = random_graph(rng, n, static_cast<int>(rng.between(5, 95)));
    REQUIRE(independence_number(g) == exhaustive_alpha(g));
    REQUIRE(clique_number(g) == exhaustive_omega(g));
  }
}

TEST_CASE("random rectangles against subset enumeration") {
  Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Object> rs;
    for (int k = 0; k < 15; ++k) rs.push_back(random_rect(rng));
    const AdjacencyMatrix g = intersection_graph(rs);
    CHECK(max_independent_set(g).size == exhaustive_alpha(g));
  }
}

TEST_CASE("full-width graphs") {
  Rng rng(46);
  const AdjacencyMatrix g = random_graph(rng, 64, 50);
  const OracleResult r = max_independent_set(g);
  CHECK(is_independent(g, r.witness));
  CHECK(g.complement().n == 64);
  CHECK(std::popcount(g.all()) == 64);
}
