#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geostream/codec.hpp"
#include "geostream/geometry.hpp"
#include "geostream/streamkit.hpp"

namespace geostream {

/// Named pass/fail checks, in the order they were run.
struct ValidationReport {
  std::vector<std::pair<std::string, bool>> checks;

  void add(std::string name, bool passed) { checks.emplace_back(std::move(name), passed); }
  bool ok() const;
  bool passed(const std::string& name) const;
  json to_json() const;
};

using BitRow = std::vector<bool>;

/// Multi-party set disjointness input: t rows of n bits, one per player.
/// Columns are 1-based in every public function.
struct DisjInstance {
  int t = 0;
  int n = 0;
  std::vector<BitRow> rows;
  int answer = 0;

  bool bit(int player, int column) const { return rows[player - 1][column - 1]; }
  /// The column where every player has a 1, if any.
  std::optional<int> full_column() const;

  friend bool operator==(const DisjInstance&, const DisjInstance&) = default;
};

/// Row weight n/2t, column weights in {0, 1, t}, at most one full column,
/// and the answer bit consistent with the rows.
ValidationReport validate(const DisjInstance& inst);

/// Throws std::invalid_argument unless t >= 2 and 2t divides n.
DisjInstance gen_disjointness(int n, int t, int answer, std::uint64_t seed);

/// Player i's segments join slot i of group j on both lines. Groups run
/// left to right on top and right to left on the bottom, so segments of
/// different groups cross and segments of one group are parallel.
ObjectStream segments_from_disjointness(const DisjInstance& inst);

/// Complement of the construction above: bottom groups keep the top order
/// but reverse the slots, so only same-group segments cross.
ObjectStream clique_segments_from_disjointness(const DisjInstance& inst);

/// Equal-length intervals realizing the complement construction: bit (i, j)
/// becomes [3jt + i, 3jt + i + t].
ObjectStream clique_unit_intervals_from_disjointness(const DisjInstance& inst);

/// Intervals with the same intersection graph as segments_from_disjointness:
/// singleton columns become long intervals sharing [n, n+1], the full
/// column's slots become disjoint short pieces inside [n, n+1).
ObjectStream interval_representation(const DisjInstance& inst);

/// Chained index input: t-1 strings of N bits plus indices sigma_1..sigma_{t-1}
/// (1-based) with strings[i][sigma_i] == z.
struct ChainInstance {
  int t = 0;
  int N = 0;
  std::vector<BitRow> strings;
  std::vector<int> sigma;
  int z = 0;

  friend bool operator==(const ChainInstance&, const ChainInstance&) = default;
};

ValidationReport validate(const ChainInstance& inst);

/// Throws std::invalid_argument unless N >= 1 and t >= 2.
ChainInstance gen_chain(int N, int t, int z, std::uint64_t seed);

/// Stack sizes and placements for the 2-interval construction. Index k holds
/// party k + 1. Stack i occupies the integer positions P_i .. P_i + S_i - 1.
struct ChainLayout {
  std::vector<BigInt> S;
  /// Placements of the left stacks.
  std::vector<BigInt> P;
  /// Placements of the mirrored right stacks (before right_offset).
  std::vector<BigInt> P_right;
  BigInt right_offset;
};

/// S_t = 2, S_i = N (S_{i+1} + 2); P_1 = 1 and
/// P_{i+1} = P_i + (sigma_i - 1)(S_{i+1} + 1). The right side uses the same
/// rule with reversed strings and sigma' = N + 1 - sigma.
ChainLayout chain_layout(const ChainInstance& inst);

/// Interval of stack `party` at slot j, placed at `origin`; party t has the
/// single slot j = 1 and covers [origin, origin + 1].
Interval stack_interval(const ChainLayout& layout, int N, int t, int party, int j,
                        const BigInt& origin);

/// Open region (lo, hi) left of slot j's startpoint in the stack of `party`:
/// any interval inside it meets exactly the slots before j.
std::pair<BigInt, BigInt> left_gap(const ChainLayout& layout, int N, int party, int j,
                                   const BigInt& origin);

/// One 2-interval per 1-bit (i, j) plus one for party t. The left members
/// form nested interval stacks, party i + 1 sitting in the left gap of
/// slot sigma_i; the right members repeat this with the strings reversed,
/// shifted by right_offset.
ObjectStream two_intervals_from_chain(const ChainInstance& inst);

/// Checks that every party's stack lies strictly inside the left gap of
/// slot sigma in the predecessor's stack, on both sides.
ValidationReport check_nesting(const ChainInstance& inst);

/// Largest bit length of any coordinate numerator or denominator.
std::size_t max_coordinate_bits(const ObjectStream& stream);

json to_json(const DisjInstance& inst);
json to_json(const ChainInstance& inst);
/// Throws std::invalid_argument on malformed input.
DisjInstance disj_from_json(const json& j);
ChainInstance chain_from_json(const json& j);

}  // namespace geostream
