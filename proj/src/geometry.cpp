#include "geostream/geometry.hpp"

#include <stdexcept>

namespace geostream {

Interval::Interval(Coord lo_, Coord hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) {
    throw std::invalid_argument("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
  }
}

TwoInterval::TwoInterval(Interval left_, Interval right_)
    : left(std::move(left_)), right(std::move(right_)) {
  if (!(left.hi < right.lo)) {
    throw std::invalid_argument("2-interval members must be disjoint and ordered");
  }
}

bool intervals_intersect(const Interval& a, const Interval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

bool segments_intersect(const PermSegment& a, const PermSegment& b) {
  // Sign of the product of the two differences; no multiplication needed.
  const auto top = a.top_x <=> b.top_x;
  const auto bottom = a.bottom_x <=> b.bottom_x;
  if (top == 0 || bottom == 0) return true;
  return (top < 0) != (bottom < 0);
}

bool rects_intersect(const UnitRect& a, const UnitRect& b) {
  return intervals_intersect(a.x, b.x) && abs(a.y_bottom - b.y_bottom) <= Coord(1);
}

bool two_intervals_intersect(const TwoInterval& a, const TwoInterval& b) {
  return intervals_intersect(a.left, b.left) || intervals_intersect(a.left, b.right) ||
         intervals_intersect(a.right, b.left) || intervals_intersect(a.right, b.right);
}

ObjectKind kind_of(const Object& o) { return static_cast<ObjectKind>(o.index()); }

std::string_view kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::interval: return "interval";
    case ObjectKind::perm_segment: return "perm_segment";
    case ObjectKind::unit_rect: return "unit_rect";
    case ObjectKind::two_interval: return "two_interval";
  }
  return "unknown";
}

ObjectKind parse_kind(std::string_view name) {
  for (auto k : {ObjectKind::interval, ObjectKind::perm_segment, ObjectKind::unit_rect,
                 ObjectKind::two_interval}) {
    if (kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown object kind '" + std::string(name) + "'");
}

bool intersects(const Object& a, const Object& b) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("cannot intersect " + std::string(kind_name(kind_of(a))) +
                                " with " + std::string(kind_name(kind_of(b))));
  }
  return std::visit(
      [&b](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return intersects(x, std::get<T>(b));
      },
      a);
}

}  // namespace geostream
