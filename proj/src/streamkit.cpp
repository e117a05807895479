#include "geostream/streamkit.hpp"

namespace geostream {

void ObjectStream::end_player() {
  const std::size_t begin = players_.empty() ? 0 : players_.back().end;
  players_.push_back(PlayerRange{static_cast<int>(players_.size()) + 1, begin, objects_.size()});
}

void ObjectStream::set_players(std::vector<PlayerRange> players) {
  std::size_t expected_begin = 0;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const auto& p = players[i];
    if (p.player != static_cast<int>(i) + 1) {
      throw std::invalid_argument("players must be numbered 1..t in order");
    }
    if (p.begin != expected_begin || p.end < p.begin) {
      throw std::invalid_argument("player ranges must be contiguous");
    }
    expected_begin = p.end;
  }
  if (!players.empty() && expected_begin != objects_.size()) {
    throw std::invalid_argument("player ranges must cover the whole stream");
  }
  players_ = std::move(players);
}

std::optional<ObjectKind> ObjectStream::uniform_kind() const {
  if (objects_.empty()) return std::nullopt;
  const ObjectKind k = kind_of(objects_.front());
  for (const auto& o : objects_) {
    if (kind_of(o) != k) return std::nullopt;
  }
  return k;
}

KindMismatch::KindMismatch(std::size_t position, ObjectKind kind)
    : std::runtime_error("object " + std::to_string(position) + " has unsupported kind '" +
                         std::string(kind_name(kind)) + "'"),
      position_(position),
      kind_(kind) {}

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace geostream
