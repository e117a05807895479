#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geostream/bits.hpp"
#include "geostream/geometry.hpp"

namespace geostream {

/// Interval endpoint outside the integer universe 1..U.
class UniverseError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operation called in the wrong phase.
class PhaseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CliqueSize {
  std::uint64_t size = 0;
  std::optional<std::uint64_t> witness;

  friend bool operator==(const CliqueSize&, const CliqueSize&) = default;
};

/// Exact maximum clique of an interval stream over integer coordinates 1..U.
///
/// Pass 1 keeps one counter per coordinate and increments every counter an
/// interval covers, so the largest counter is the maximum point depth, which
/// for intervals equals the maximum clique. Pass 2 reports every interval
/// containing the smallest coordinate of maximum depth.
///
/// Memory is accounted with a uniform counter width of
/// ceil(log2(max + 1)) bits, i.e. U * w bits plus an O(log U) header.
class CounterArray {
 public:
  enum class Phase { counting, filtering, done };

  explicit CounterArray(std::uint64_t universe);

  /// Throws UniverseError when an endpoint is not an integer in [1, U].
  void pass1_process(const Interval& iv);
  /// Maximum depth so far and the smallest coordinate attaining it.
  CliqueSize omega() const;
  /// Fixes the witness and moves to the filtering phase.
  void end_counting();
  /// Throws PhaseError before end_counting().
  bool pass2_filter(const Interval& iv) const;
  /// Closes the filtering pass; no further input is accepted.
  void end_filtering();

  Phase phase() const { return phase_; }
  std::uint64_t universe() const { return counts_.size(); }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::optional<std::uint64_t> witness() const { return witness_; }

  /// Canonical encoding: gamma(U), phase (2 bits), gamma(w), U counters of w
  /// bits each, then the witness when one has been fixed.
  void encode(BitWriter& out) const;
  std::size_t state_size_bits() const;
  /// Everything except the U * w counter block.
  std::size_t header_bits() const;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t max_count_ = 0;
  Phase phase_ = Phase::counting;
  std::optional<std::uint64_t> witness_;
};

struct CliqueResult {
  std::uint64_t size = 0;
  std::optional<std::uint64_t> witness;
  /// Intervals reported in pass 2 (empty when a sink consumed them).
  std::vector<Interval> clique;
};

/// Two-pass StreamAlgorithm: pass 1 counts, pass 2 recovers the clique. The
/// recovered intervals are either collected (and counted as state) or pushed
/// to a sink without being stored.
class IntervalClique {
 public:
  using Sink = std::function<void(const Interval&)>;

  explicit IntervalClique(std::uint64_t universe, Sink sink = {});

  bool accepts(ObjectKind k) const { return k == ObjectKind::interval; }
  void process(const Object& o);
  void finish_pass();
  CliqueResult result() const;
  std::size_t state_size_bits() const;

  const CounterArray& counters() const { return counters_; }

 private:
  CounterArray counters_;
  Sink sink_;
  std::vector<Interval> collected_;
};

}  // namespace geostream
