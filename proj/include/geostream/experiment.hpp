#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geostream/codec.hpp"
#include "geostream/streamkit.hpp"

namespace geostream {

/// Constructions: segments, clique-segments, unit-intervals, interval-rep
/// (set disjointness, grid over n x t x answer), two-intervals (chained
/// index, grid over N x t x z), random-intervals and random-rects (grid over
/// the stream length n). Algorithms: interval-select, rect-select, clique,
/// none.
struct ExperimentSpec {
  std::string construction;
  std::vector<int> n;
  std::vector<int> t;
  std::vector<int> N;
  /// The answer bit for disjointness, z for the chained index.
  std::vector<int> answers;
  std::vector<std::uint64_t> seeds;
  std::string algorithm = "none";
  /// Defaults to 2 for clique and 1 otherwise.
  std::optional<std::size_t> passes;
  /// Clique universe; defaults to the largest endpoint of each stream.
  /// Also the endpoint range of random-intervals (default 30).
  std::optional<std::uint64_t> universe;
  bool timing = true;
  int jobs = 1;
};

/// Throws std::invalid_argument on an unknown name, an algorithm that
/// cannot consume the construction, or grid values violating a generator's
/// preconditions.
void validate(const ExperimentSpec& spec);

struct ExperimentRow {
  std::size_t index = 0;
  std::string construction;
  std::optional<int> n, t, N, answer;
  std::uint64_t seed = 0;
  std::string algorithm;
  /// "alpha" or "omega".
  std::string measure;
  std::optional<std::uint64_t> alg_value;
  std::optional<int> oracle_value;
  /// oracle_value / alg_value, when both exist and alg_value > 0.
  std::optional<double> ratio;
  std::size_t peak_state_bits = 0;
  std::size_t handoff_bits_max = 0;
  double runtime_ms = 0;
  std::string error;
};

/// Rows in grid order (n, t, N, answer, seed nested left to right), however
/// many jobs run them. Per-row failures land in the error column.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

std::string to_csv(const std::vector<ExperimentRow>& rows, bool timing);
json to_json(const std::vector<ExperimentRow>& rows, bool timing);

/// Builds one instance stream of a disjointness or chained-index
/// construction from grid values.
ObjectStream build_construction(const std::string& construction, int n, int t, int N, int answer,
                                std::uint64_t seed);

/// `count` intervals with integer endpoints drawn from 1..universe.
ObjectStream random_interval_stream(int count, std::uint64_t universe, std::uint64_t seed);
/// `count` unit-height rectangles: integer x endpoints in [0, 40] and
/// y_bottom = p/q with q in 1..4 and |p/q| <= 3.
ObjectStream random_rect_stream(int count, std::uint64_t seed);

}  // namespace geostream
