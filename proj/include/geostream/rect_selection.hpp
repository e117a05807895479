#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "geostream/bits.hpp"
#include "geostream/geometry.hpp"
#include "geostream/interval_selection.hpp"

namespace geostream {

/// Half-open horizontal band [ell, ell + 2); parity = ell mod 2.
struct WindowKey {
  BigInt ell;
  int parity = 0;

  Coord lower() const { return Coord(ell); }
  Coord upper() const { return Coord(ell) + Coord(2); }

  friend bool operator==(const WindowKey& a, const WindowKey& b) {
    return a.parity == b.parity && a.ell == b.ell;
  }
};

struct WindowKeyLess {
  bool operator()(const WindowKey& a, const WindowKey& b) const {
    if (a.parity != b.parity) return a.parity < b.parity;
    return a.ell < b.ell;
  }
};

/// The unique band that fully contains r: ell = floor(r.y_bottom).
WindowKey window_of(const UnitRect& r);

/// One-pass 4-approximation for independent sets of unit-height rectangles.
/// Rectangles are routed to their band and the band runs an IntervalSelector
/// over x-projections; the answer is the richer of the two band parities.
class RectSelector {
 public:
  void process(const UnitRect& r);

  /// Selected rectangles of one parity, bands in increasing order.
  std::vector<UnitRect> selected(int parity) const;
  /// The larger of selected(0) and selected(1); ties go to parity 0.
  std::vector<UnitRect> result() const;
  int result_parity() const;

  std::size_t window_count() const { return windows_.size(); }
  /// Total rectangles currently selected across both parities.
  std::size_t stored_count() const;
  const std::map<WindowKey, IntervalSelector<Coord>, WindowKeyLess>& windows() const {
    return windows_;
  }

  void encode(BitWriter& out) const;
  std::size_t state_size_bits() const;

 private:
  std::map<WindowKey, IntervalSelector<Coord>, WindowKeyLess> windows_;
};

class RectSelection {
 public:
  bool accepts(ObjectKind k) const { return k == ObjectKind::unit_rect; }
  void process(const Object& o) { selector_.process(std::get<UnitRect>(o)); }
  void finish_pass() {}
  std::vector<UnitRect> result() const { return selector_.result(); }
  std::size_t state_size_bits() const { return selector_.state_size_bits(); }
  const RectSelector& selector() const { return selector_; }

 private:
  RectSelector selector_;
};

}  // namespace geostream
