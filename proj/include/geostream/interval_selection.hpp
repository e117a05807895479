#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "geostream/bits.hpp"
#include "geostream/geometry.hpp"

namespace geostream {

inline void encode_tag(BitWriter&, std::monostate) {}
inline void encode_tag(BitWriter& w, const Coord& c) { w.put_coord(c); }

/// One-pass 2-approximation for interval selection in O(alpha) space.
///
/// The line is partitioned into windows. Each window remembers two intervals
/// among those seen and fully contained in it: `low_end`, the one with the
/// smallest right endpoint (ties: largest left endpoint), and `high_start`,
/// the one with the largest left endpoint (ties: smallest right endpoint).
/// All intervals contained in a window pairwise intersect. A new contained
/// interval that misses `high_start` on the left, or `low_end` on the right,
/// splits the window at that witness's endpoint, and both halves again hold
/// exactly one pairwise-intersecting group. Intervals crossing a window
/// boundary are dropped.
///
/// Each optimal interval is either inside a window (at most one per window)
/// or crosses a boundary (at most one per boundary), so alpha <= 2k - 1 for
/// k windows, and the output holds one interval per window.
template <class Tag = std::monostate>
class IntervalSelector {
 public:
  struct Entry {
    Interval interval;
    Tag tag{};

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  IntervalSelector() { windows_.emplace(Cut::unbounded(), Window{}); }

  void process(const Interval& iv, Tag tag = Tag{}) {
    auto it = window_at(iv.lo);
    const auto next = std::next(it);
    if (next != windows_.end() && !Cut::point(iv.hi).less(next->first)) return;

    Window& w = it->second;
    Entry e{iv, std::move(tag)};
    if (!w.low_end) {
      w.low_end = e;
      w.high_start = std::move(e);
      ++stored_count_;
      return;
    }
    const Interval& low = w.low_end->interval;
    const Interval& high = w.high_start->interval;
    if (iv.hi < high.lo) {
      // Everything already here contains high.lo; cut just before it.
      Entry witness = *w.high_start;
      const Cut cut = Cut::before(witness.interval.lo);
      w.low_end = e;
      w.high_start = std::move(e);
      windows_.emplace_hint(next, cut, Window{witness, witness});
      ++stored_count_;
    } else if (low.hi < iv.lo) {
      Entry witness = *w.low_end;
      const Cut cut = Cut::after(witness.interval.hi);
      w.high_start = witness;
      windows_.emplace_hint(next, cut, Window{e, e});
      ++stored_count_;
    } else {
      if (iv.hi < low.hi || (iv.hi == low.hi && low.lo < iv.lo)) w.low_end = e;
      if (high.lo < iv.lo || (iv.lo == high.lo && iv.hi < high.hi)) w.high_start = std::move(e);
    }
  }

  /// The selected pairwise-disjoint intervals in left-to-right order.
  std::vector<Entry> stored() const {
    std::vector<Entry> out;
    out.reserve(stored_count_);
    for (const auto& [cut, w] : windows_) {
      if (w.low_end) out.push_back(*w.low_end);
    }
    return out;
  }

  std::size_t size() const { return stored_count_; }
  std::size_t window_count() const { return windows_.size(); }

  /// Canonical encoding: window count, then per window its lower cut
  /// (absent for the leftmost), a presence bit, low_end with tag, a
  /// same-entry bit, and high_start with tag when it differs.
  void encode(BitWriter& out) const {
    out.put_gamma(windows_.size());
    for (const auto& [cut, w] : windows_) {
      if (!cut.unbounded_left) {
        out.put_coord(cut.at);
        out.put_bit(cut.rank == Cut::kAfter);
      }
      out.put_bit(w.low_end.has_value());
      if (!w.low_end) continue;
      out.put_interval(w.low_end->interval);
      encode_tag(out, w.low_end->tag);
      const bool same = *w.low_end == *w.high_start;
      out.put_bit(same);
      if (!same) {
        out.put_interval(w.high_start->interval);
        encode_tag(out, w.high_start->tag);
      }
    }
  }

  std::size_t state_size_bits() const {
    BitWriter w;
    encode(w);
    return w.size();
  }

 private:
  // A cut sits just before or just after a coordinate. Points of the line are
  // ordered between the two cuts at the same coordinate.
  struct Cut {
    static constexpr int kBefore = 0;
    static constexpr int kPoint = 1;
    static constexpr int kAfter = 2;

    bool unbounded_left = false;
    Coord at;
    int rank = kPoint;

    static Cut unbounded() { return Cut{true, Coord{}, kBefore}; }
    static Cut before(const Coord& c) { return Cut{false, c, kBefore}; }
    static Cut after(const Coord& c) { return Cut{false, c, kAfter}; }
    static Cut point(const Coord& c) { return Cut{false, c, kPoint}; }

    bool less(const Cut& o) const {
      if (unbounded_left != o.unbounded_left) return unbounded_left;
      if (unbounded_left) return false;
      if (at != o.at) return at < o.at;
      return rank < o.rank;
    }
  };

  struct CutLess {
    bool operator()(const Cut& a, const Cut& b) const { return a.less(b); }
  };

  struct Window {
    std::optional<Entry> low_end;
    std::optional<Entry> high_start;
  };

  using WindowMap = std::map<Cut, Window, CutLess>;

  typename WindowMap::iterator window_at(const Coord& x) {
    auto it = windows_.upper_bound(Cut::point(x));
    return std::prev(it);
  }

  WindowMap windows_;
  std::size_t stored_count_ = 0;
};

/// StreamAlgorithm adapter over interval streams.
class IntervalSelection {
 public:
  bool accepts(ObjectKind k) const { return k == ObjectKind::interval; }
  void process(const Object& o) { selector_.process(std::get<Interval>(o)); }
  void finish_pass() {}

  std::vector<Interval> result() const {
    std::vector<Interval> out;
    for (auto& e : selector_.stored()) out.push_back(e.interval);
    return out;
  }

  std::size_t state_size_bits() const { return selector_.state_size_bits(); }
  const IntervalSelector<>& selector() const { return selector_; }

 private:
  IntervalSelector<> selector_;
};

}  // namespace geostream
