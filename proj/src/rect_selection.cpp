#include "geostream/rect_selection.hpp"

namespace geostream {

WindowKey window_of(const UnitRect& r) {
  WindowKey key;
  key.ell = r.y_bottom.floor();
  key.parity = mpz_odd_p(key.ell.get_mpz_t()) ? 1 : 0;
  return key;
}

void RectSelector::process(const UnitRect& r) {
  windows_[window_of(r)].process(r.x, r.y_bottom);
}

std::vector<UnitRect> RectSelector::selected(int parity) const {
  std::vector<UnitRect> out;
  for (const auto& [key, sel] : windows_) {
    if (key.parity != parity) continue;
    for (const auto& e : sel.stored()) out.push_back(UnitRect{e.interval, e.tag});
  }
  return out;
}

int RectSelector::result_parity() const {
  std::size_t count[2] = {0, 0};
  for (const auto& [key, sel] : windows_) count[key.parity] += sel.size();
  return count[1] > count[0] ? 1 : 0;
}

std::vector<UnitRect> RectSelector::result() const { return selected(result_parity()); }

std::size_t RectSelector::stored_count() const {
  std::size_t n = 0;
  for (const auto& [key, sel] : windows_) n += sel.size();
  return n;
}

void RectSelector::encode(BitWriter& out) const {
  out.put_gamma(windows_.size());
  for (const auto& [key, sel] : windows_) {
    out.put_bigint(key.ell);
    sel.encode(out);
  }
}

std::size_t RectSelector::state_size_bits() const {
  BitWriter w;
  encode(w);
  return w.size();
}

}  // namespace geostream
