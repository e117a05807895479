#include <doctest.h>

#include <cmath>

#include "geostream/hardness.hpp"
#include "geostream/oracle.hpp"

using namespace geostream;

namespace {

BitRow bits(const std::string& s) {
  BitRow r;
  for (char c : s) r.push_back(c == '1');
  return r;
}

DisjInstance disj(int t, int answer, std::initializer_list<const char*> rows) {
  DisjInstance d;
  d.t = t;
  d.answer = answer;
  for (auto r : rows) d.rows.push_back(bits(r));
  d.n = static_cast<int>(d.rows[0].size());
  return d;
}

Interval iv(long a, long b) { return Interval(Coord(a), Coord(b)); }
Coord q(long p, long d) { return Coord(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("generated disjointness instances satisfy every property") {
  for (int t : {2, 3, 4, 6}) {
    for (int answer : {0, 1}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DisjInstance d = gen_disjointness(12 * t, t, answer, seed);
        const ValidationReport r = validate(d);
        CHECK(r.ok());
        CHECK(d.full_column().has_value() == (answer == 1));
      }
    }
  }
  const DisjInstance small = gen_disjointness(4, 2, 1, 0);
  CHECK(validate(small).ok());
  REQUIRE(small.full_column());
  CHECK(small.rows[0] == small.rows[1]);
}

TEST_CASE("disjointness generation is deterministic and checks divisibility") {
  CHECK(gen_disjointness(24, 4, 1, 5) == gen_disjointness(24, 4, 1, 5));
  CHECK_FALSE(gen_disjointness(24, 4, 1, 5) == gen_disjointness(24, 4, 1, 6));
  CHECK_THROWS_AS(gen_disjointness(6, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_disjointness(4, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_disjointness(8, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("validator rejects broken instances") {
  CHECK(validate(disj(2, 1, {"0100", "0100"})).ok());
  CHECK(validate(disj(2, 0, {"1000", "0010"})).ok());

  const auto wrong_answer = validate(disj(2, 1, {"1000", "0010"}));
  CHECK_FALSE(wrong_answer.passed("answer_consistent"));
  const auto heavy_row = validate(disj(2, 0, {"1100", "0010"}));
  CHECK_FALSE(heavy_row.passed("row_weight"));
  const auto column = validate(disj(3, 0, {"100000", "100000", "000001"}));
  CHECK_FALSE(column.passed("column_weight"));
  CHECK_FALSE(validate(disj(2, 1, {"11000000", "11000000"})).passed("at_most_one_full_column"));
  CHECK_FALSE(validate(disj(2, 0, {"1000"})).passed("shape"));

  // Flipping any single bit of a valid instance breaks some property.
  const DisjInstance base = gen_disjointness(12, 3, 1, 2);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 12; ++j) {
      DisjInstance m = base;
      m.rows[i - 1][j - 1] = !m.rows[i - 1][j - 1];
      CHECK_FALSE(validate(m).ok());
    }
  }
}

TEST_CASE("segment construction coordinates") {
  const auto yes = segments_from_disjointness(disj(2, 1, {"0100", "0100"}));
  CHECK(yes.as<PermSegment>() == std::vector<PermSegment>{{3, 5}, {4, 6}});
  CHECK(max_independent_set(yes).size == 2);
  CHECK(yes.players().size() == 2);

  const auto no = segments_from_disjointness(disj(2, 0, {"1000", "0010"}));
  CHECK(no.as<PermSegment>() == std::vector<PermSegment>{{1, 7}, {6, 4}});
  CHECK(max_independent_set(no).size == 1);
}

TEST_CASE("segment construction without a full column is a clique") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DisjInstance d = gen_disjointness(24, 4, 0, seed);
    const AdjacencyMatrix g = intersection_graph(segments_from_disjointness(d));
    CHECK(independence_number(g) == 1);
    CHECK(clique_number(g) == 12);
  }
}

TEST_CASE("clique segment construction") {
  const auto yes = clique_segments_from_disjointness(disj(2, 1, {"0100", "0100"}));
  CHECK(yes.as<PermSegment>() == std::vector<PermSegment>{{3, 4}, {4, 3}});
  CHECK(max_clique(yes).size == 2);

  const DisjInstance d = gen_disjointness(24, 4, 0, 3);
  const AdjacencyMatrix g = intersection_graph(clique_segments_from_disjointness(d));
  CHECK(clique_number(g) == 1);
  CHECK(independence_number(g) == 12);

  for (int answer : {0, 1}) {
    const DisjInstance e = gen_disjointness(24, 4, answer, 8);
    CHECK(intersection_graph(clique_segments_from_disjointness(e)) ==
          intersection_graph(segments_from_disjointness(e)).complement());
  }
}

TEST_CASE("unit interval clique construction") {
  const auto yes = clique_unit_intervals_from_disjointness(disj(2, 1, {"0100", "0100"}));
  CHECK(yes.as<Interval>() == std::vector{iv(13, 15), iv(14, 16)});
  CHECK(max_clique(yes).size == 2);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DisjInstance d = gen_disjointness(24, 4, 0, seed);
    const ObjectStream s = clique_unit_intervals_from_disjointness(d);
    CHECK(clique_number(intersection_graph(s)) == 1);
    for (const auto& i : s.as<Interval>()) CHECK(i.hi - i.lo == Coord(4));
  }
}

TEST_CASE("interval representation reproduces the segment graph") {
  const auto crossing = interval_representation(disj(2, 0, {"1000", "0010"}));
  CHECK(crossing.as<Interval>() == std::vector{iv(1, 5), iv(3, 7)});
  CHECK(intersection_graph(crossing) ==
        intersection_graph(segments_from_disjointness(disj(2, 0, {"1000", "0010"}))));

  const auto parallel = interval_representation(disj(2, 1, {"0100", "0100"}));
  CHECK(parallel.as<Interval>() == std::vector{Interval(4, q(17, 4)), Interval(q(9, 2), q(19, 4))});
  CHECK(intersection_graph(parallel).edge_count() == 0);

  const DisjInstance mixed = gen_disjointness(8, 2, 1, 4);
  const AdjacencyMatrix a = intersection_graph(interval_representation(mixed));
  CHECK(a.n == 4);
  CHECK(a == intersection_graph(segments_from_disjointness(mixed)));
}

TEST_CASE("generated chain instances keep the promise") {
  const ChainInstance c = gen_chain(4, 2, 1, 0);
  CHECK(c.strings[0][c.sigma[0] - 1]);
  const ChainInstance d = gen_chain(4, 3, 0, 0);
  CHECK_FALSE(d.strings[0][d.sigma[0] - 1]);
  CHECK_FALSE(d.strings[1][d.sigma[1] - 1]);
  CHECK(validate(c).ok());
  CHECK(validate(d).ok());

  ChainInstance broken = c;
  broken.strings[0][c.sigma[0] - 1] = false;
  CHECK_FALSE(validate(broken).passed("promise"));
  ChainInstance out_of_range = c;
  out_of_range.sigma[0] = 5;
  CHECK_FALSE(validate(out_of_range).passed("sigma_in_range"));

  CHECK_THROWS_AS(gen_chain(0, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_chain(4, 1, 1, 0), std::invalid_argument);
  CHECK(gen_chain(6, 3, 1, 9) == gen_chain(6, 3, 1, 9));
}

TEST_CASE("stack sizes follow the recurrence") {
  const auto two = chain_layout(gen_chain(4, 2, 1, 0));
  CHECK(two.S == std::vector<BigInt>{16, 2});
  const auto three = chain_layout(gen_chain(4, 3, 1, 0));
  CHECK(three.S == std::vector<BigInt>{72, 16, 2});
  CHECK(three.P[0] == 1);
  CHECK(three.right_offset == 2 * (1 + 72));
}

TEST_CASE("placements sit in the gap before the chosen slot") {
  ChainInstance c{3, 4, {bits("0110"), bits("1010")}, {3, 1}, 1};
  REQUIRE(validate(c).ok());
  const ChainLayout l = chain_layout(c);
  // S = {72, 16, 2}; party 2 starts after two slots of width 17.
  CHECK(l.P == std::vector<BigInt>{1, 35, 35});
  CHECK(l.P_right == std::vector<BigInt>{1, 18, 27});
  CHECK(stack_interval(l, 4, 3, 1, 1, 1) == iv(17, 69));
  CHECK(stack_interval(l, 4, 3, 1, 4, 1) == iv(68, 72));
  CHECK(stack_interval(l, 4, 3, 3, 1, 35) == iv(35, 36));
  const auto gap = left_gap(l, 4, 1, 3, 1);
  CHECK(gap.first == 34);
  CHECK(gap.second == 51);
}

TEST_CASE("two-interval gap on small instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ChainInstance yes = gen_chain(4, 2, 1, seed);
    const ObjectStream s = two_intervals_from_chain(yes);
    const OracleResult mis = max_independent_set(s);
    CHECK(mis.size == 2);
    // The party-2 object and the one at sigma_1 are disjoint.
    int at_sigma = 0;
    for (int j = 1; j < yes.sigma[0]; ++j) at_sigma += yes.strings[0][j - 1] ? 1 : 0;
    const auto objs = s.as<TwoInterval>();
    CHECK_FALSE(two_intervals_intersect(objs[at_sigma], objs.back()));

    CHECK(max_independent_set(two_intervals_from_chain(gen_chain(4, 2, 0, seed))).size == 1);
  }
}

TEST_CASE("chain construction structure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ChainInstance c = gen_chain(5, 4, seed % 2, seed);
    const ObjectStream s = two_intervals_from_chain(c);
    CHECK(check_nesting(c).ok());
    CHECK(s.players().size() == 4);

    // Separated: every left member precedes every right member.
    const auto objs = s.as<TwoInterval>();
    Coord last_left = objs[0].left.hi, first_right = objs[0].right.lo;
    for (const auto& o : objs) {
      last_left = std::max(last_left, o.left.hi);
      first_right = std::min(first_right, o.right.lo);
    }
    CHECK(last_left < first_right);

    // Each party's left members form a stack: starts and ends in index
    // order, every start before every end.
    for (const auto& p : s.players()) {
      for (std::size_t a = p.begin; a + 1 < p.end; ++a) {
        CHECK(objs[a].left.lo < objs[a + 1].left.lo);
        CHECK(objs[a].left.hi < objs[a + 1].left.hi);
        CHECK(objs[a + 1].left.lo < objs[p.begin].left.hi);
      }
    }
    CHECK(static_cast<double>(max_coordinate_bits(s)) <= 4.0 * c.t * std::log2(c.N + 2.0));
  }
}

TEST_CASE("nesting for three parties") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ChainInstance c = gen_chain(4, 3, 1, seed);
    const ChainLayout l = chain_layout(c);
    const auto [lo, hi] = left_gap(l, 4, 1, c.sigma[0], l.P[0]);
    for (int j = 1; j <= 4; ++j) {
      const Interval i = stack_interval(l, 4, 3, 2, j, l.P[1]);
      CHECK(Coord(lo) < i.lo);
      CHECK(i.hi < Coord(hi));
    }
  }
}

TEST_CASE("instances round trip through JSON") {
  const DisjInstance d = gen_disjointness(12, 3, 1, 1);
  CHECK(disj_from_json(to_json(d)) == d);
  const ChainInstance c = gen_chain(5, 3, 0, 1);
  CHECK(chain_from_json(to_json(c)) == c);
  CHECK(to_json(d)["rows"][0].get<std::string>().size() == 12);
  CHECK_THROWS_AS(disj_from_json(to_json(c)), std::invalid_argument);
  CHECK_THROWS_AS(chain_from_json(json{{"kind", "chain"}, {"t", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(disj_from_json(json{{"kind", "disj"}, {"t", 2}, {"n", 2}, {"answer", 0}, {"rows", {"0x"}}}),
                  std::invalid_argument);
}

TEST_CASE("validation reports serialize by name") {
  const ValidationReport r = validate(gen_disjointness(8, 2, 0, 0));
  const json j = r.to_json();
  CHECK(j["row_weight"] == "pass");
  CHECK_THROWS_AS(r.passed("nonexistent"), std::out_of_range);
}
