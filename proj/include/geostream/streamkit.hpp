#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geostream/geometry.hpp"

namespace geostream {

/// Contiguous block of stream positions [begin, end) contributed by one player.
struct PlayerRange {
  int player = 1;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const PlayerRange&, const PlayerRange&) = default;
};

/// Replayable object sequence with optional player boundaries. Boundaries,
/// when present, cover the sequence contiguously for players 1..t in order.
class ObjectStream {
 public:
  ObjectStream() = default;
  explicit ObjectStream(std::vector<Object> objects) : objects_(std::move(objects)) {}

  void push_back(Object o) { objects_.push_back(std::move(o)); }

  /// Closes the current player's block: everything appended since the last
  /// call belongs to the next player id.
  void end_player();

  /// Throws std::invalid_argument if the ranges do not partition the stream.
  void set_players(std::vector<PlayerRange> players);

  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<PlayerRange>& players() const { return players_; }
  bool has_players() const { return !players_.empty(); }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }
  const Object& operator[](std::size_t i) const { return objects_[i]; }

  /// The single kind shared by every object, or nullopt for empty/mixed streams.
  std::optional<ObjectKind> uniform_kind() const;

  /// Objects of one kind, in order. Throws std::invalid_argument on a mismatch.
  template <class T>
  std::vector<T> as() const {
    std::vector<T> out;
    out.reserve(objects_.size());
    for (const auto& o : objects_) {
      const T* p = std::get_if<T>(&o);
      if (p == nullptr) throw std::invalid_argument("stream holds a different object kind");
      out.push_back(*p);
    }
    return out;
  }

  friend bool operator==(const ObjectStream&, const ObjectStream&) = default;

 private:
  std::vector<Object> objects_;
  std::vector<PlayerRange> players_;
};

struct StreamStats {
  std::size_t items = 0;
  std::size_t passes = 0;
  std::size_t peak_state_bits = 0;
  /// State size at every player boundary, pass by pass.
  std::vector<std::size_t> handoff_bits;
  /// Peak state size within each pass.
  std::vector<std::size_t> pass_peak_bits;

  friend bool operator==(const StreamStats&, const StreamStats&) = default;
};

/// An object arrived that the algorithm does not handle.
class KindMismatch : public std::runtime_error {
 public:
  KindMismatch(std::size_t position, ObjectKind kind);
  std::size_t position() const { return position_; }
  ObjectKind kind() const { return kind_; }

 private:
  std::size_t position_;
  ObjectKind kind_;
};

/// Malformed instance file; line numbers are 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Streaming algorithm contract. result() must not mutate state, and
/// state_size_bits() is the exact length of the canonical state encoding.
template <class A>
concept StreamAlgorithm = requires(A a, const A ca, const Object& o, ObjectKind k) {
  { ca.accepts(k) } -> std::same_as<bool>;
  a.process(o);
  a.finish_pass();
  ca.result();
  { ca.state_size_bits() } -> std::convertible_to<std::size_t>;
};

namespace detail {

template <StreamAlgorithm A>
void run_pass(A& alg, const ObjectStream& stream, StreamStats& stats, bool record_handoffs) {
  std::size_t pass_peak = alg.state_size_bits();
  std::size_t next_player = 0;
  const auto& players = stream.players();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (record_handoffs) {
      while (next_player + 1 < players.size() && players[next_player].end == i) {
        stats.handoff_bits.push_back(alg.state_size_bits());
        ++next_player;
      }
    }
    const Object& o = stream[i];
    if (!alg.accepts(kind_of(o))) throw KindMismatch(i, kind_of(o));
    alg.process(o);
    ++stats.items;
    const std::size_t bits = alg.state_size_bits();
    if (bits > pass_peak) pass_peak = bits;
  }
  if (record_handoffs) {
    // Players at the tail with empty blocks still hand off.
    while (next_player + 1 < players.size()) {
      stats.handoff_bits.push_back(alg.state_size_bits());
      ++next_player;
    }
  }
  stats.pass_peak_bits.push_back(pass_peak);
  if (pass_peak > stats.peak_state_bits) stats.peak_state_bits = pass_peak;
  alg.finish_pass();
}

}  // namespace detail

/// Feeds the stream `passes` times, calling finish_pass() at the end of each
/// pass. Peak state is sampled after every process() call.
template <StreamAlgorithm A>
auto run_stream(A& alg, const ObjectStream& stream, std::size_t passes = 1) {
  if (passes < 1) throw std::invalid_argument("run_stream needs at least one pass");
  StreamStats stats;
  stats.passes = passes;
  stats.peak_state_bits = alg.state_size_bits();
  for (std::size_t p = 0; p < passes; ++p) {
    detail::run_pass(alg, stream, stats, stream.has_players());
  }
  return std::make_pair(alg.result(), stats);
}

/// One pass in which each player's block is fed in turn; the state size at
/// every handoff lands in handoff_bits.
template <StreamAlgorithm A>
auto run_player_partitioned(A& alg, const ObjectStream& stream) {
  if (!stream.has_players()) {
    throw std::invalid_argument("stream has no player boundaries");
  }
  return run_stream(alg, stream, 1);
}

}  // namespace geostream
