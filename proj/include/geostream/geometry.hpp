#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "geostream/coord.hpp"

namespace geostream {

/// Closed interval [lo, hi] on the real line; zero length is allowed.
struct Interval {
  Coord lo;
  Coord hi;

  Interval() = default;
  /// Throws std::invalid_argument when lo > hi.
  Interval(Coord lo_, Coord hi_);

  bool contains(const Coord& c) const { return lo <= c && c <= hi; }
  /// Closed containment: other ⊆ *this.
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Segment between (top_x, 1) and (bottom_x, 0).
struct PermSegment {
  Coord top_x;
  Coord bottom_x;

  friend bool operator==(const PermSegment&, const PermSegment&) = default;
};

/// Closed rectangle [x.lo, x.hi] x [y_bottom, y_bottom + 1].
struct UnitRect {
  Interval x;
  Coord y_bottom;

  Interval y() const { return Interval(y_bottom, y_bottom + Coord(1)); }

  friend bool operator==(const UnitRect&, const UnitRect&) = default;
};

/// Pair of disjoint intervals treated as one object; left.hi < right.lo.
struct TwoInterval {
  Interval left;
  Interval right;

  TwoInterval() : left(), right(Coord(1), Coord(1)) {}
  /// Throws std::invalid_argument unless left.hi < right.lo.
  TwoInterval(Interval left_, Interval right_);

  friend bool operator==(const TwoInterval&, const TwoInterval&) = default;
};

bool intervals_intersect(const Interval& a, const Interval& b);
bool segments_intersect(const PermSegment& a, const PermSegment& b);
bool rects_intersect(const UnitRect& a, const UnitRect& b);
bool two_intervals_intersect(const TwoInterval& a, const TwoInterval& b);

inline bool intersects(const Interval& a, const Interval& b) { return intervals_intersect(a, b); }
inline bool intersects(const PermSegment& a, const PermSegment& b) { return segments_intersect(a, b); }
inline bool intersects(const UnitRect& a, const UnitRect& b) { return rects_intersect(a, b); }
inline bool intersects(const TwoInterval& a, const TwoInterval& b) { return two_intervals_intersect(a, b); }

enum class ObjectKind { interval, perm_segment, unit_rect, two_interval };

using Object = std::variant<Interval, PermSegment, UnitRect, TwoInterval>;

ObjectKind kind_of(const Object& o);
std::string_view kind_name(ObjectKind k);
/// Throws std::invalid_argument for unknown names.
ObjectKind parse_kind(std::string_view name);

/// Intersection test for two objects of the same kind. Throws
/// std::invalid_argument on a kind mismatch.
bool intersects(const Object& a, const Object& b);

}  // namespace geostream
