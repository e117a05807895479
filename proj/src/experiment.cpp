#include "geostream/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "geostream/hardness.hpp"
#include "geostream/interval_clique.hpp"
#include "geostream/interval_selection.hpp"
#include "geostream/oracle.hpp"
#include "geostream/rect_selection.hpp"
#include "geostream/rng.hpp"

namespace geostream {

namespace {

const std::set<std::string> kDisjConstructions{"segments", "clique-segments", "unit-intervals",
                                               "interval-rep"};
const std::set<std::string> kIntervalConstructions{"unit-intervals", "interval-rep",
                                                   "random-intervals"};
constexpr std::uint64_t kDefaultRandomUniverse = 30;

bool is_disj(const std::string& c) { return kDisjConstructions.count(c) > 0; }
bool is_chain(const std::string& c) { return c == "two-intervals"; }
bool is_random(const std::string& c) { return c == "random-intervals" || c == "random-rects"; }

std::string measure_for(const ExperimentSpec& spec) {
  if (spec.algorithm == "clique") return "omega";
  if (spec.algorithm != "none") return "alpha";
  if (spec.construction == "clique-segments" || spec.construction == "unit-intervals") return "omega";
  return "alpha";
}

struct GridPoint {
  std::optional<int> n, t, N, answer;
  std::uint64_t seed = 0;
};

std::vector<GridPoint> grid(const ExperimentSpec& spec) {
  std::vector<GridPoint> points;
  const std::vector<std::optional<int>> none{std::nullopt};
  auto wrap = [&none](const std::vector<int>& v, bool used) {
    if (!used) return none;
    return std::vector<std::optional<int>>(v.begin(), v.end());
  };
  const auto& c = spec.construction;
  const auto ns = wrap(spec.n, is_disj(c) || is_random(c));
  const auto ts = wrap(spec.t, is_disj(c) || is_chain(c));
  const auto Ns = wrap(spec.N, is_chain(c));
  const auto as = wrap(spec.answers, is_disj(c) || is_chain(c));
  for (const auto& n : ns)
    for (const auto& t : ts)
      for (const auto& N : Ns)
        for (const auto& a : as)
          for (auto seed : spec.seeds) points.push_back({n, t, N, a, seed});
  return points;
}

template <class Alg>
void run_algorithm(Alg& alg, const ObjectStream& stream, std::size_t passes, ExperimentRow& row,
                   auto value_of) {
  auto [result, stats] = run_stream(alg, stream, passes);
  row.alg_value = value_of(result);
  row.peak_state_bits = stats.peak_state_bits;
  if (!stats.handoff_bits.empty()) {
    row.handoff_bits_max = *std::max_element(stats.handoff_bits.begin(), stats.handoff_bits.end());
  }
}

std::uint64_t max_endpoint(const ObjectStream& stream) {
  std::uint64_t u = 1;
  for (const auto& iv : stream.as<Interval>()) {
    if (!iv.hi.is_integer()) throw UniverseError("clique needs integer endpoints");
    if (iv.hi.numerator() > 0 && iv.hi.numerator().fits_ulong_p()) {
      u = std::max<std::uint64_t>(u, iv.hi.numerator().get_ui());
    }
  }
  return u;
}

void run_row(const ExperimentSpec& spec, const GridPoint& p, ExperimentRow& row) {
  const auto start = std::chrono::steady_clock::now();
  try {
    ObjectStream stream;
    const auto& c = spec.construction;
    if (c == "random-intervals") {
      stream = random_interval_stream(*p.n, spec.universe.value_or(kDefaultRandomUniverse), p.seed);
    } else if (c == "random-rects") {
      stream = random_rect_stream(*p.n, p.seed);
    } else {
      stream = build_construction(c, p.n.value_or(0), *p.t, p.N.value_or(0), *p.answer, p.seed);
    }

    const std::size_t passes = spec.passes.value_or(spec.algorithm == "clique" ? 2 : 1);
    if (spec.algorithm == "interval-select") {
      IntervalSelection alg;
      run_algorithm(alg, stream, passes, row, [](const auto& r) { return r.size(); });
    } else if (spec.algorithm == "rect-select") {
      RectSelection alg;
      run_algorithm(alg, stream, passes, row, [](const auto& r) { return r.size(); });
    } else if (spec.algorithm == "clique") {
      IntervalClique alg(spec.universe.value_or(max_endpoint(stream)));
      run_algorithm(alg, stream, passes, row, [](const CliqueResult& r) { return r.size; });
    }

    const AdjacencyMatrix g = intersection_graph(stream);
    row.oracle_value = row.measure == "omega" ? clique_number(g) : independence_number(g);
    if (row.alg_value && *row.alg_value > 0) {
      row.ratio = static_cast<double>(*row.oracle_value) / static_cast<double>(*row.alg_value);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
  } else {
    return std::to_string(*v);
  }
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

void validate(const ExperimentSpec& spec) {
  const auto& c = spec.construction;
  if (!is_disj(c) && !is_chain(c) && !is_random(c)) {
    throw std::invalid_argument("unknown construction '" + c + "'");
  }
  const auto& a = spec.algorithm;
  if (a == "interval-select" || a == "clique") {
    if (!kIntervalConstructions.count(c)) {
      throw std::invalid_argument(a + " needs an interval construction, not '" + c + "'");
    }
    if (a == "clique" && c == "interval-rep") {
      throw std::invalid_argument("clique needs integer endpoints; interval-rep has fractional ones");
    }
  } else if (a == "rect-select") {
    if (c != "random-rects") throw std::invalid_argument("rect-select needs random-rects");
  } else if (a != "none") {
    throw std::invalid_argument("unknown algorithm '" + a + "'");
  }
  if (spec.passes && *spec.passes < 1) throw std::invalid_argument("passes must be at least 1");
  if (a == "clique" && spec.passes && *spec.passes != 2) {
    throw std::invalid_argument("clique runs exactly two passes");
  }
  if (spec.universe && *spec.universe < 1) throw std::invalid_argument("universe must be at least 1");
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  for (int b : spec.answers) {
    if (b != 0 && b != 1) throw std::invalid_argument("answer/z values must be 0 or 1");
  }
  if (is_disj(c)) {
    for (int t : spec.t) {
      if (t < 2) throw std::invalid_argument("t must be at least 2");
      for (int n : spec.n) {
        if (n <= 0 || n % (2 * t) != 0) {
          throw std::invalid_argument("n=" + std::to_string(n) + " is not a positive multiple of 2t=" +
                                      std::to_string(2 * t));
        }
      }
    }
  } else if (is_chain(c)) {
    for (int t : spec.t) {
      if (t < 2) throw std::invalid_argument("t must be at least 2");
    }
    for (int N : spec.N) {
      if (N < 1) throw std::invalid_argument("N must be at least 1");
    }
  } else {
    for (int n : spec.n) {
      if (n < 0) throw std::invalid_argument("stream length n must be non-negative");
    }
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const auto points = grid(spec);
  std::vector<ExperimentRow> rows(points.size());
  const std::string measure = measure_for(spec);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& r = rows[i];
    r.index = i;
    r.construction = spec.construction;
    r.n = points[i].n;
    r.t = points[i].t;
    r.N = points[i].N;
    r.answer = points[i].answer;
    r.seed = points[i].seed;
    r.algorithm = spec.algorithm;
    r.measure = measure;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) run_row(spec, points[i], rows[i]);
  };
  const int jobs = std::min<int>(spec.jobs, static_cast<int>(std::max<std::size_t>(points.size(), 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows, bool timing) {
  std::ostringstream out;
  out << "index,construction,n,t,N,answer,seed,algorithm,measure,alg_value,oracle_value,ratio,"
         "peak_state_bits,handoff_bits_max";
  if (timing) out << ",runtime_ms";
  out << ",error\n";
  for (const auto& r : rows) {
    out << r.index << ',' << r.construction << ',' << opt_str(r.n) << ',' << opt_str(r.t) << ','
        << opt_str(r.N) << ',' << opt_str(r.answer) << ',' << r.seed << ',' << r.algorithm << ','
        << r.measure << ',' << opt_str(r.alg_value) << ',' << opt_str(r.oracle_value) << ','
        << opt_str(r.ratio) << ',' << r.peak_state_bits << ',' << r.handoff_bits_max;
    if (timing) out << ',' << format_ms(r.runtime_ms);
    out << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

json to_json(const std::vector<ExperimentRow>& rows, bool timing) {
  json arr = json::array();
  auto put = [](json& j, const char* key, const auto& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  for (const auto& r : rows) {
    json j;
    j["index"] = r.index;
    j["construction"] = r.construction;
    put(j, "n", r.n);
    put(j, "t", r.t);
    put(j, "N", r.N);
    put(j, "answer", r.answer);
    j["seed"] = r.seed;
    j["algorithm"] = r.algorithm;
    j["measure"] = r.measure;
    put(j, "alg_value", r.alg_value);
    put(j, "oracle_value", r.oracle_value);
    put(j, "ratio", r.ratio);
    j["peak_state_bits"] = r.peak_state_bits;
    j["handoff_bits_max"] = r.handoff_bits_max;
    if (timing) j["runtime_ms"] = r.runtime_ms;
    j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr;
}

ObjectStream build_construction(const std::string& construction, int n, int t, int N, int answer,
                                std::uint64_t seed) {
  if (is_chain(construction)) return two_intervals_from_chain(gen_chain(N, t, answer, seed));
  if (!is_disj(construction)) throw std::invalid_argument("unknown construction '" + construction + "'");
  const DisjInstance inst = gen_disjointness(n, t, answer, seed);
  if (construction == "segments") return segments_from_disjointness(inst);
  if (construction == "clique-segments") return clique_segments_from_disjointness(inst);
  if (construction == "unit-intervals") return clique_unit_intervals_from_disjointness(inst);
  return interval_representation(inst);
}

ObjectStream random_interval_stream(int count, std::uint64_t universe, std::uint64_t seed) {
  Rng rng(seed);
  ObjectStream s;
  for (int i = 0; i < count; ++i) {
    auto a = static_cast<long>(rng.between(1, static_cast<std::int64_t>(universe)));
    auto b = static_cast<long>(rng.between(1, static_cast<std::int64_t>(universe)));
    if (a > b) std::swap(a, b);
    s.push_back(Interval(Coord(a), Coord(b)));
  }
  return s;
}

ObjectStream random_rect_stream(int count, std::uint64_t seed) {
  Rng rng(seed);
  ObjectStream s;
  for (int i = 0; i < count; ++i) {
    auto a = static_cast<long>(rng.between(0, 40));
    auto b = static_cast<long>(rng.between(0, 40));
    if (a > b) std::swap(a, b);
    const long q = static_cast<long>(rng.between(1, 4));
    const long p = static_cast<long>(rng.between(-3 * q, 3 * q));
    s.push_back(UnitRect{Interval(Coord(a), Coord(b)), Coord(BigInt(p), BigInt(q))});
  }
  return s;
}

}  // namespace geostream
