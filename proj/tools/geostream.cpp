// Command-line front end: instance generators, constructions, streaming
// algorithms, the exact oracle, gap verification and experiment grids.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geostream/codec.hpp"
#include "geostream/experiment.hpp"
#include "geostream/hardness.hpp"
#include "geostream/interval_clique.hpp"
#include "geostream/interval_selection.hpp"
#include "geostream/oracle.hpp"
#include "geostream/rect_selection.hpp"

using namespace geostream;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GEOSTREAM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GEOSTREAM_SEED is not a number: ") + env);
    }
  }
  return 0;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json read_instance(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw UsageError("instance file is not JSON: " + std::string(e.what()));
  }
}

std::vector<std::string> interval_objects(const std::vector<Interval>& ivs) {
  std::vector<std::string> out;
  for (const auto& iv : ivs) out.push_back(to_json(Object(iv)).dump());
  return out;
}

struct Options {
  int n = 8, t = 2, N = 4, answer = 1, z = 1;
  std::optional<std::uint64_t> seed;
  std::size_t passes = 0;
  std::optional<std::uint64_t> universe;
  std::string in, out, format = "json";
  bool no_timing = false;
  int jobs = 1;
  std::string which;

  std::uint64_t seed_value() const { return seed ? *seed : default_seed(); }
};

int cmd_gen_disj(const Options& o) {
  emit(to_json(gen_disjointness(o.n, o.t, o.answer, o.seed_value())).dump(2) + "\n", o.out);
  return kOk;
}

int cmd_gen_chain(const Options& o) {
  emit(to_json(gen_chain(o.N, o.t, o.z, o.seed_value())).dump(2) + "\n", o.out);
  return kOk;
}

int cmd_build(const Options& o) {
  ObjectStream stream;
  if (!o.in.empty()) {
    const json inst = read_instance(o.in);
    if (o.which == "two-intervals") {
      stream = two_intervals_from_chain(chain_from_json(inst));
    } else {
      const DisjInstance d = disj_from_json(inst);
      if (o.which == "segments") stream = segments_from_disjointness(d);
      else if (o.which == "clique-segments") stream = clique_segments_from_disjointness(d);
      else if (o.which == "unit-intervals") stream = clique_unit_intervals_from_disjointness(d);
      else stream = interval_representation(d);
    }
  } else {
    const int bit = o.which == "two-intervals" ? o.z : o.answer;
    stream = build_construction(o.which, o.n, o.t, o.N, bit, o.seed_value());
  }
  emit(to_jsonl(stream), o.out);
  return kOk;
}

int cmd_run(const Options& o) {
  const ObjectStream stream = from_jsonl(slurp(o.in));
  json report;
  report["algorithm"] = o.which;
  if (o.which == "interval-select") {
    IntervalSelection alg;
    auto [result, stats] = run_stream(alg, stream, o.passes ? o.passes : 1);
    report["value"] = result.size();
    json objs = json::array();
    for (const auto& iv : result) objs.push_back(to_json(Object(iv)));
    report["result"] = objs;
    report["stats"] = to_json(stats);
  } else if (o.which == "rect-select") {
    RectSelection alg;
    auto [result, stats] = run_stream(alg, stream, o.passes ? o.passes : 1);
    report["value"] = result.size();
    json objs = json::array();
    for (const auto& r : result) objs.push_back(to_json(Object(r)));
    report["result"] = objs;
    report["stats"] = to_json(stats);
  } else {
    if (o.passes && o.passes != 2) throw UsageError("clique runs exactly two passes");
    std::uint64_t universe = 1;
    if (o.universe) {
      universe = *o.universe;
    } else {
      for (const auto& iv : stream.as<Interval>()) {
        if (iv.hi.is_integer() && iv.hi.numerator() > 0 && iv.hi.numerator().fits_ulong_p()) {
          universe = std::max<std::uint64_t>(universe, iv.hi.numerator().get_ui());
        }
      }
    }
    IntervalClique alg(universe);
    auto [result, stats] = run_stream(alg, stream, 2);
    report["value"] = result.size;
    report["witness"] = result.witness ? json(*result.witness) : json(nullptr);
    json objs = json::array();
    for (const auto& iv : result.clique) objs.push_back(to_json(Object(iv)));
    report["result"] = objs;
    report["stats"] = to_json(stats);
  }
  emit(report.dump(2) + "\n", o.out);
  return kOk;
}

int cmd_oracle(const Options& o) {
  const ObjectStream stream = from_jsonl(slurp(o.in));
  const AdjacencyMatrix g = intersection_graph(stream);
  const OracleResult mis = max_independent_set(g);
  const OracleResult mc = max_clique(g);
  json report{{"n", g.n},
              {"alpha", mis.size},
              {"omega", mc.size},
              {"witnesses", {{"alpha", mis.witness}, {"omega", mc.witness}}}};
  emit(report.dump(2) + "\n", o.out);
  return kOk;
}

// Gap and validity checks for a disjointness or chained-index instance.
int cmd_verify(const Options& o) {
  const json inst = read_instance(o.in);
  ValidationReport report;
  auto merge = [&report](const ValidationReport& r) {
    for (const auto& [name, ok] : r.checks) report.add(name, ok);
  };
  if (inst.value("kind", "") == "chain") {
    const ChainInstance c = chain_from_json(inst);
    merge(validate(c));
    if (report.ok()) {
      merge(check_nesting(c));
      const ObjectStream s = two_intervals_from_chain(c);
      const int alpha = independence_number(intersection_graph(s));
      report.add("two_interval_gap", alpha == (c.z == 1 ? c.t : 1));
      report.add("coordinate_bits",
                 static_cast<double>(max_coordinate_bits(s)) <= 4.0 * c.t * std::log2(c.N + 2.0));
    }
  } else {
    const DisjInstance d = disj_from_json(inst);
    merge(validate(d));
    if (report.ok()) {
      const int expect = d.answer == 1 ? d.t : 1;
      const AdjacencyMatrix seg = intersection_graph(segments_from_disjointness(d));
      report.add("segment_alpha_gap", independence_number(seg) == expect);
      report.add("clique_segment_omega_gap",
                 clique_number(intersection_graph(clique_segments_from_disjointness(d))) == expect);
      report.add("unit_interval_omega_gap",
                 clique_number(intersection_graph(clique_unit_intervals_from_disjointness(d))) == expect);
      report.add("interval_rep_adjacency", intersection_graph(interval_representation(d)) == seg);
    }
  }
  json out{{"ok", report.ok()}, {"checks", report.to_json()}};
  emit(out.dump(2) + "\n", o.out);
  return report.ok() ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming geometric independent set and clique toolkit"};
  app.require_subcommand(1);
  Options o;

  auto seed_opt = [&o](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed (default: GEOSTREAM_SEED or 0)");
  };
  auto out_opt = [&o](CLI::App* c) { c->add_option("--out", o.out, "Output file (default: stdout)"); };

  auto* gd = app.add_subcommand("gen-disj", "Generate a set disjointness instance");
  gd->add_option("--n", o.n, "Columns (multiple of 2t)");
  gd->add_option("--t", o.t, "Players");
  gd->add_option("--answer", o.answer, "1 if a full column exists")->check(CLI::IsMember({0, 1}));
  seed_opt(gd);
  out_opt(gd);

  auto* gc = app.add_subcommand("gen-chain", "Generate a chained index instance");
  gc->add_option("--N", o.N, "String length");
  gc->add_option("--t", o.t, "Parties");
  gc->add_option("--z", o.z, "Common indexed bit")->check(CLI::IsMember({0, 1}));
  seed_opt(gc);
  out_opt(gc);

  auto* b = app.add_subcommand("build", "Turn an instance into an object stream (JSONL)");
  b->add_option("construction", o.which)
      ->required()
      ->check(CLI::IsMember(
          {"segments", "clique-segments", "unit-intervals", "interval-rep", "two-intervals"}));
  b->add_option("--in", o.in, "Instance JSON; generated from the flags when absent");
  b->add_option("--n", o.n);
  b->add_option("--t", o.t);
  b->add_option("--N", o.N);
  b->add_option("--answer", o.answer)->check(CLI::IsMember({0, 1}));
  b->add_option("--z", o.z)->check(CLI::IsMember({0, 1}));
  seed_opt(b);
  out_opt(b);

  auto* r = app.add_subcommand("run", "Run a streaming algorithm over a JSONL stream");
  r->add_option("algorithm", o.which)
      ->required()
      ->check(CLI::IsMember({"interval-select", "rect-select", "clique"}));
  r->add_option("--in", o.in, "Stream file (default: stdin)");
  r->add_option("--passes", o.passes);
  r->add_option("--universe", o.universe, "Clique universe 1..U (default: largest endpoint)");
  out_opt(r);

  auto* orc = app.add_subcommand("oracle", "Exact alpha and omega of a JSONL stream");
  orc->add_option("--in", o.in, "Stream file (default: stdin)");
  out_opt(orc);

  auto* v = app.add_subcommand("verify", "Check an instance and the promised gaps of its constructions");
  v->add_option("--in", o.in, "Instance JSON (default: stdin)");
  out_opt(v);

  ExperimentSpec spec;
  std::vector<int> answers, zs;
  std::vector<std::uint64_t> seeds;
  int seed_count = 0;
  auto* e = app.add_subcommand("experiment", "Run an algorithm and the oracle over a parameter grid");
  e->add_option("--construction", spec.construction)
      ->required()
      ->check(CLI::IsMember({"segments", "clique-segments", "unit-intervals", "interval-rep",
                             "two-intervals", "random-intervals", "random-rects"}));
  e->add_option("--algorithm", spec.algorithm)
      ->check(CLI::IsMember({"interval-select", "rect-select", "clique", "none"}));
  e->add_option("--n", spec.n, "Columns, or stream length for random constructions")->delimiter(',');
  e->add_option("--t", spec.t)->delimiter(',');
  e->add_option("--N", spec.N)->delimiter(',');
  e->add_option("--answer", answers)->delimiter(',');
  e->add_option("--z", zs)->delimiter(',');
  e->add_option("--seed", seeds, "Seeds (default: GEOSTREAM_SEED or 0)")->delimiter(',');
  e->add_option("--seeds", seed_count, "Use this many consecutive seeds from the first one");
  e->add_option("--passes", o.passes);
  e->add_option("--universe", o.universe);
  e->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  e->add_flag("--no-timing", o.no_timing, "Omit the runtime column");
  e->add_option("--jobs", spec.jobs, "Parallel workers");
  out_opt(e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gd) return cmd_gen_disj(o);
    if (*gc) return cmd_gen_chain(o);
    if (*b) return cmd_build(o);
    if (*r) return cmd_run(o);
    if (*orc) return cmd_oracle(o);
    if (*v) return cmd_verify(o);

    // experiment
    if (e->count("--format") == 0) o.format = "csv";
    spec.answers = !zs.empty() ? zs : answers;
    if (spec.answers.empty()) spec.answers = {0, 1};
    if (seeds.empty()) seeds.push_back(default_seed());
    if (seed_count > 0) {
      const std::uint64_t first = seeds.front();
      seeds.clear();
      for (int i = 0; i < seed_count; ++i) seeds.push_back(first + static_cast<std::uint64_t>(i));
    }
    spec.seeds = seeds;
    if (o.passes) spec.passes = o.passes;
    spec.universe = o.universe;
    spec.timing = !o.no_timing;
    const auto rows = run_experiment(spec);
    emit(o.format == "csv" ? to_csv(rows, spec.timing) : to_json(rows, spec.timing).dump(2) + "\n",
         o.out);
    return kOk;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const FormatError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidationFailed;
  }
}
