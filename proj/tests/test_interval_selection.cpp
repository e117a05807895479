#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "geostream/interval_selection.hpp"
#include "geostream/oracle.hpp"

using namespace geostream;
using geostream::testing::greedy_interval_alpha;
using geostream::testing::pairwise_disjoint;

namespace {

Interval iv(long a, long b) { return Interval(Coord(a), Coord(b)); }

std::vector<Interval> select(const std::vector<Interval>& stream) {
  IntervalSelector<> sel;
  for (const auto& i : stream) sel.process(i);
  std::vector<Interval> out;
  for (const auto& e : sel.stored()) out.push_back(e.interval);
  return out;
}

// Runs the selector and checks safety and space after every item.
bool check_stream(const std::vector<Interval>& stream, int& alpha_out, std::size_t& size_out) {
  IntervalSelector<> sel;
  std::vector<Interval> prefix;
  for (const auto& i : stream) {
    sel.process(i);
    prefix.push_back(i);
    std::vector<Interval> stored;
    for (const auto& e : sel.stored()) stored.push_back(e.interval);
    if (!pairwise_disjoint(stored)) return false;
    if (static_cast<int>(stored.size()) > greedy_interval_alpha(prefix)) return false;
  }
  alpha_out = greedy_interval_alpha(stream);
  size_out = sel.size();
  return 2 * static_cast<int>(size_out) >= alpha_out;
}

}  // namespace

TEST_CASE("first interval is stored") {
  CHECK(select({iv(1, 2)}) == std::vector{iv(1, 2)});
}

TEST_CASE("a contained interval replaces its container") {
  CHECK(select({iv(0, 10), iv(2, 3)}) == std::vector{iv(2, 3)});
}

TEST_CASE("an overlapping interval that is not contained is not selected") {
  CHECK(select({iv(0, 3), iv(2, 5)}) == std::vector{iv(0, 3)});
}

TEST_CASE("a short interval left of the latest start splits the window") {
  const std::vector stream{iv(0, 3), iv(2, 5), iv(0, 1)};
  CHECK(select(stream) == std::vector{iv(0, 1), iv(2, 5)});
  CHECK(greedy_interval_alpha(stream) == 2);
}

TEST_CASE("pairwise disjoint streams are kept whole") {
  std::vector<Interval> stream;
  for (long k = 9; k >= 0; --k) stream.push_back(iv(3 * k, 3 * k + 1));
  auto out = select(stream);
  CHECK(out.size() == 10);
  std::sort(stream.begin(), stream.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
  CHECK(out == stream);
}

TEST_CASE("chain of overlaps followed by short ends") {
  const std::vector stream{iv(0, 5), iv(4, 9), iv(8, 13), iv(0, 1), iv(12, 13)};
  CHECK(select(stream) == std::vector{iv(0, 1), iv(12, 13)});
  CHECK(greedy_interval_alpha(stream) == 3);
}

TEST_CASE("stream that defeats replace-on-containment alone") {
  const std::vector stream{iv(2, 4), iv(1, 2), iv(4, 5), iv(3, 3)};
  CHECK(select(stream) == std::vector{iv(1, 2), iv(3, 3), iv(4, 5)});
}

TEST_CASE("duplicates are idempotent") {
  CHECK(select({iv(1, 2), iv(1, 2), iv(1, 2)}) == std::vector{iv(1, 2)});
  IntervalSelector<> a, b;
  a.process(iv(1, 2));
  b.process(iv(1, 2));
  b.process(iv(1, 2));
  CHECK(a.state_size_bits() == b.state_size_bits());
}

TEST_CASE("tags travel with their intervals") {
  IntervalSelector<Coord> sel;
  sel.process(iv(0, 10), Coord(7));
  sel.process(iv(2, 3), Coord(BigInt(1), BigInt(2)));
  REQUIRE(sel.stored().size() == 1);
  CHECK(sel.stored()[0].tag == Coord(BigInt(1), BigInt(2)));
}

TEST_CASE("rational endpoints") {
  const Coord half(BigInt(1), BigInt(2));
  const Coord third(BigInt(1), BigInt(3));
  // Touching at 1/2 still intersects, so nothing splits here.
  CHECK(select({Interval(0, 1), Interval(half, Coord(3)), Interval(Coord(0), half)}) ==
        std::vector{Interval(Coord(0), half)});
  CHECK(select({Interval(0, 1), Interval(half, Coord(3)), Interval(Coord(0), third)}) ==
        std::vector{Interval(Coord(0), third), Interval(half, Coord(3))});
}

TEST_CASE("exhaustive factor-two check over small endpoint sets") {
  std::vector<Interval> pool;
  for (long a = 1; a <= 6; ++a)
    for (long b = a; b <= 6; ++b) pool.push_back(iv(a, b));

  std::size_t streams = 0;
  std::vector<int> pick;
  // All subsets of size <= 5, each in every order.
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) {
      std::vector<int> order = pick;
      do {
        std::vector<Interval> stream;
        for (int k : order) stream.push_back(pool[k]);
        int alpha = 0;
        std::size_t size = 0;
        if (!check_stream(stream, alpha, size)) {
          std::string text;
          for (auto& i : stream) text += "[" + i.lo.str() + "," + i.hi.str() + "]";
          FAIL("stream " << text << " alpha=" << alpha << " kept=" << size);
        }
        ++streams;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    if (pick.size() == 5) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      pick.push_back(static_cast<int>(k));
      self(self, k + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  CHECK(streams == 2593941);
}

TEST_CASE("random streams keep the factor and the space bound") {
  Rng rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<Interval> stream;
    const int len = static_cast<int>(rng.between(1, 20));
    for (int k = 0; k < len; ++k) stream.push_back(geostream::testing::random_interval(rng, 1, 30));
    int alpha = 0;
    std::size_t size = 0;
    REQUIRE(check_stream(stream, alpha, size));
  }
}

TEST_CASE("window count stays below twice the output plus one") {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    IntervalSelector<> sel;
    for (int k = 0; k < 30; ++k) sel.process(geostream::testing::random_interval(rng, 1, 50));
    // Only the leftmost window may be empty.
    CHECK(sel.window_count() <= sel.size() + 1);
  }
}

TEST_CASE("adapter satisfies the stream contract") {
  static_assert(StreamAlgorithm<IntervalSelection>);
  IntervalSelection alg;
  CHECK(alg.accepts(ObjectKind::interval));
  CHECK_FALSE(alg.accepts(ObjectKind::unit_rect));
  alg.process(iv(1, 4));
  const auto before = alg.state_size_bits();
  (void)alg.result();
  CHECK(alg.state_size_bits() == before);
}
