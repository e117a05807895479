#include "geostream/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "geostream/rng.hpp"

namespace geostream {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool ValidationReport::passed(const std::string& name) const {
  for (const auto& [n, ok] : checks) {
    if (n == name) return ok;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

json ValidationReport::to_json() const {
  json j = json::object();
  for (const auto& [name, ok] : checks) j[name] = ok ? "pass" : "fail";
  return j;
}

// ---------------------------------------------------------------------------
// Set disjointness

std::optional<int> DisjInstance::full_column() const {
  for (int j = 1; j <= n; ++j) {
    bool all = !rows.empty();
    for (const auto& row : rows) all = all && row[j - 1];
    if (all) return j;
  }
  return std::nullopt;
}

ValidationReport validate(const DisjInstance& inst) {
  ValidationReport r;
  bool shape = inst.t >= 2 && inst.n >= 1 && static_cast<int>(inst.rows.size()) == inst.t;
  for (const auto& row : inst.rows) shape = shape && static_cast<int>(row.size()) == inst.n;
  r.add("shape", shape);
  if (!shape) return r;

  const bool divisible = inst.n % (2 * inst.t) == 0;
  bool rows_ok = divisible;
  for (const auto& row : inst.rows) {
    rows_ok = rows_ok && std::count(row.begin(), row.end(), true) == inst.n / (2 * inst.t);
  }
  r.add("row_weight", rows_ok);

  bool columns_ok = true;
  int full = 0;
  for (int j = 0; j < inst.n; ++j) {
    int w = 0;
    for (const auto& row : inst.rows) w += row[j] ? 1 : 0;
    columns_ok = columns_ok && (w == 0 || w == 1 || w == inst.t);
    if (w == inst.t) ++full;
  }
  r.add("column_weight", columns_ok);
  r.add("at_most_one_full_column", full <= 1);
  r.add("answer_consistent", (inst.answer == 1) == (full >= 1) && (inst.answer == 0 || inst.answer == 1));
  return r;
}

DisjInstance gen_disjointness(int n, int t, int answer, std::uint64_t seed) {
  if (t < 2) throw std::invalid_argument("disjointness needs t >= 2");
  if (n <= 0 || n % (2 * t) != 0) {
    throw std::invalid_argument("disjointness needs n divisible by 2t (n=" + std::to_string(n) +
                                ", t=" + std::to_string(t) + ")");
  }
  if (answer != 0 && answer != 1) throw std::invalid_argument("answer must be 0 or 1");

  Rng rng(seed);
  std::vector<int> columns(n);
  std::iota(columns.begin(), columns.end(), 0);
  rng.shuffle(columns);

  const int per_row = n / (2 * t);
  DisjInstance inst{t, n, std::vector<BitRow>(t, BitRow(n, false)), answer};
  std::size_t next = 0;
  if (answer == 1) {
    const int full = columns[next++];
    for (auto& row : inst.rows) row[full] = true;
  }
  for (auto& row : inst.rows) {
    for (int k = answer; k < per_row; ++k) row[columns[next++]] = true;
  }
  return inst;
}

namespace {

template <class Emit>
ObjectStream per_bit_stream(const DisjInstance& inst, Emit emit) {
  ObjectStream s;
  for (int i = 1; i <= inst.t; ++i) {
    for (int j = 1; j <= inst.n; ++j) {
      if (inst.bit(i, j)) s.push_back(emit(i, j));
    }
    s.end_player();
  }
  return s;
}

}  // namespace

ObjectStream segments_from_disjointness(const DisjInstance& inst) {
  const long t = inst.t, n = inst.n;
  return per_bit_stream(inst, [&](long i, long j) -> Object {
    return PermSegment{Coord((j - 1) * t + i), Coord((n - j) * t + i)};
  });
}

ObjectStream clique_segments_from_disjointness(const DisjInstance& inst) {
  const long t = inst.t;
  return per_bit_stream(inst, [&](long i, long j) -> Object {
    return PermSegment{Coord((j - 1) * t + i), Coord((j - 1) * t + (t + 1 - i))};
  });
}

ObjectStream clique_unit_intervals_from_disjointness(const DisjInstance& inst) {
  const long t = inst.t;
  return per_bit_stream(inst, [&](long i, long j) -> Object {
    const long start = 3 * j * t + i;
    return Interval(Coord(start), Coord(start + t));
  });
}

ObjectStream interval_representation(const DisjInstance& inst) {
  const long t = inst.t, n = inst.n;
  const auto full = inst.full_column();
  return per_bit_stream(inst, [&](long i, long j) -> Object {
    if (full && *full == j) {
      const Coord lo = Coord(n) + Coord(BigInt(i - 1), BigInt(t));
      return Interval(lo, lo + Coord(BigInt(1), BigInt(2 * t)));
    }
    return Interval(Coord(j), Coord(n + j));
  });
}

// ---------------------------------------------------------------------------
// Chained index

ValidationReport validate(const ChainInstance& inst) {
  ValidationReport r;
  bool shape = inst.t >= 2 && inst.N >= 1 &&
               static_cast<int>(inst.strings.size()) == inst.t - 1 &&
               static_cast<int>(inst.sigma.size()) == inst.t - 1;
  if (shape) {
    for (const auto& s : inst.strings) shape = shape && static_cast<int>(s.size()) == inst.N;
  }
  r.add("shape", shape);
  if (!shape) return r;

  bool in_range = true;
  for (int s : inst.sigma) in_range = in_range && s >= 1 && s <= inst.N;
  r.add("sigma_in_range", in_range);
  r.add("z_is_bit", inst.z == 0 || inst.z == 1);

  bool promise = in_range;
  for (int i = 0; promise && i < inst.t - 1; ++i) {
    promise = inst.strings[i][inst.sigma[i] - 1] == (inst.z == 1);
  }
  r.add("promise", promise);
  return r;
}

ChainInstance gen_chain(int N, int t, int z, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("chain needs N >= 1");
  if (t < 2) throw std::invalid_argument("chain needs t >= 2");
  if (z != 0 && z != 1) throw std::invalid_argument("z must be 0 or 1");
  Rng rng(seed);
  ChainInstance inst{t, N, {}, {}, z};
  for (int i = 0; i < t - 1; ++i) {
    BitRow s(N);
    for (int j = 0; j < N; ++j) s[j] = rng.coin();
    const int sigma = static_cast<int>(rng.between(1, N));
    s[sigma - 1] = (z == 1);
    inst.strings.push_back(std::move(s));
    inst.sigma.push_back(sigma);
  }
  return inst;
}

namespace {

std::vector<BigInt> placements(const std::vector<BigInt>& S, const std::vector<int>& sigma) {
  std::vector<BigInt> P(S.size());
  P[0] = 1;
  for (std::size_t k = 0; k + 1 < S.size(); ++k) {
    P[k + 1] = P[k] + BigInt(sigma[k] - 1) * (S[k + 1] + 1);
  }
  return P;
}

}  // namespace

ChainLayout chain_layout(const ChainInstance& inst) {
  const int t = inst.t;
  ChainLayout layout;
  layout.S.resize(t);
  layout.S[t - 1] = 2;
  for (int k = t - 2; k >= 0; --k) layout.S[k] = BigInt(inst.N) * (layout.S[k + 1] + 2);

  std::vector<int> reversed_sigma;
  for (int s : inst.sigma) reversed_sigma.push_back(inst.N + 1 - s);
  layout.P = placements(layout.S, inst.sigma);
  layout.P_right = placements(layout.S, reversed_sigma);
  layout.right_offset = 2 * (layout.P[0] + layout.S[0]);
  return layout;
}

Interval stack_interval(const ChainLayout& layout, int N, int t, int party, int j,
                        const BigInt& origin) {
  if (party == t) return Interval(Coord(origin), Coord(origin + 1));
  const BigInt step = layout.S[party] + 1;  // S of the next party, plus one
  const BigInt start = origin + BigInt(j) * step - 1;
  const BigInt end = origin + BigInt(N) * step - 1 + j;
  return Interval(Coord(start), Coord(end));
}

std::pair<BigInt, BigInt> left_gap(const ChainLayout& layout, int N, int party, int j,
                                   const BigInt& origin) {
  const BigInt step = layout.S[party] + 1;
  const BigInt start = origin + BigInt(j) * step - 1;
  (void)N;
  return {start - step, start};
}

ObjectStream two_intervals_from_chain(const ChainInstance& inst) {
  const ChainLayout layout = chain_layout(inst);
  const Coord offset(layout.right_offset);
  const int t = inst.t, N = inst.N;
  auto shifted = [&offset](const Interval& iv) { return Interval(iv.lo + offset, iv.hi + offset); };

  ObjectStream s;
  for (int i = 1; i < t; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (!inst.strings[i - 1][j - 1]) continue;
      Interval left = stack_interval(layout, N, t, i, j, layout.P[i - 1]);
      Interval right = stack_interval(layout, N, t, i, N + 1 - j, layout.P_right[i - 1]);
      s.push_back(TwoInterval(std::move(left), shifted(right)));
    }
    s.end_player();
  }
  s.push_back(TwoInterval(stack_interval(layout, N, t, t, 1, layout.P[t - 1]),
                          shifted(stack_interval(layout, N, t, t, 1, layout.P_right[t - 1]))));
  s.end_player();
  return s;
}

namespace {

// Smallest start and largest end over all slots of a stack.
std::pair<BigInt, BigInt> stack_extent(const ChainLayout& layout, int N, int t, int party,
                                       const BigInt& origin) {
  const Interval first = stack_interval(layout, N, t, party, 1, origin);
  const Interval last = stack_interval(layout, N, t, party, party == t ? 1 : N, origin);
  return {first.lo.numerator(), last.hi.numerator()};
}

}  // namespace

ValidationReport check_nesting(const ChainInstance& inst) {
  ValidationReport r;
  const ChainLayout layout = chain_layout(inst);
  bool left = true, right = true;
  for (int i = 1; i < inst.t; ++i) {
    const int s = inst.sigma[i - 1];
    auto inside = [&](const std::vector<BigInt>& P, int slot) {
      const auto [lo, hi] = left_gap(layout, inst.N, i, slot, P[i - 1]);
      const auto [first, last] = stack_extent(layout, inst.N, inst.t, i + 1, P[i]);
      return lo < first && last < hi;
    };
    left = left && inside(layout.P, s);
    right = right && inside(layout.P_right, inst.N + 1 - s);
  }
  r.add("left_nesting", left);
  r.add("right_nesting", right);
  return r;
}

std::size_t max_coordinate_bits(const ObjectStream& stream) {
  std::size_t best = 0;
  auto see = [&best](const Coord& c) {
    best = std::max({best, bit_length(c.numerator()), bit_length(c.denominator())});
  };
  auto see_iv = [&see](const Interval& iv) {
    see(iv.lo);
    see(iv.hi);
  };
  for (const auto& o : stream.objects()) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Interval>) {
            see_iv(x);
          } else if constexpr (std::is_same_v<T, PermSegment>) {
            see(x.top_x);
            see(x.bottom_x);
          } else if constexpr (std::is_same_v<T, UnitRect>) {
            see_iv(x.x);
            see(x.y_bottom);
          } else {
            see_iv(x.left);
            see_iv(x.right);
          }
        },
        o);
  }
  return best;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string bits_to_string(const BitRow& row) {
  std::string s;
  for (bool b : row) s.push_back(b ? '1' : '0');
  return s;
}

BitRow bits_from_string(const std::string& s) {
  BitRow row;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit strings may only contain 0 and 1");
    row.push_back(c == '1');
  }
  return row;
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind) {
    throw std::invalid_argument(std::string("expected a '") + kind + "' instance");
  }
}

}  // namespace

json to_json(const DisjInstance& inst) {
  json rows = json::array();
  for (const auto& r : inst.rows) rows.push_back(bits_to_string(r));
  return json{{"kind", "disj"}, {"t", inst.t}, {"n", inst.n}, {"answer", inst.answer}, {"rows", rows}};
}

json to_json(const ChainInstance& inst) {
  json strings = json::array();
  for (const auto& s : inst.strings) strings.push_back(bits_to_string(s));
  return json{{"kind", "chain"}, {"t", inst.t},         {"N", inst.N},
              {"z", inst.z},      {"sigma", inst.sigma}, {"strings", strings}};
}

DisjInstance disj_from_json(const json& j) {
  expect_kind(j, "disj");
  try {
    DisjInstance inst;
    inst.t = j.at("t").get<int>();
    inst.n = j.at("n").get<int>();
    inst.answer = j.at("answer").get<int>();
    for (const auto& r : j.at("rows")) inst.rows.push_back(bits_from_string(r.get<std::string>()));
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed disj instance: ") + e.what());
  }
}

ChainInstance chain_from_json(const json& j) {
  expect_kind(j, "chain");
  try {
    ChainInstance inst;
    inst.t = j.at("t").get<int>();
    inst.N = j.at("N").get<int>();
    inst.z = j.at("z").get<int>();
    inst.sigma = j.at("sigma").get<std::vector<int>>();
    for (const auto& s : j.at("strings")) inst.strings.push_back(bits_from_string(s.get<std::string>()));
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed chain instance: ") + e.what());
  }
}

}  // namespace geostream
