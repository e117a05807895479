#include "geostream/codec.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace geostream {

namespace {

Coord coord_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) return Coord::parse(v.get<std::string>());
  if (v.is_number_integer()) return Coord(v.get<long>());
  throw std::invalid_argument(std::string("field '") + key + "' is not a coordinate");
}

Interval interval_field(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected an interval object");
  return Interval(coord_field(j, "lo"), coord_field(j, "hi"));
}

const json& sub(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Interval& iv) { return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}}; }

json to_json(const Object& o) {
  json j;
  j["kind"] = kind_name(kind_of(o));
  std::visit(
      [&j](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Interval>) {
          j["lo"] = x.lo.str();
          j["hi"] = x.hi.str();
        } else if constexpr (std::is_same_v<T, PermSegment>) {
          j["top"] = x.top_x.str();
          j["bottom"] = x.bottom_x.str();
        } else if constexpr (std::is_same_v<T, UnitRect>) {
          j["x"] = to_json(x.x);
          j["y_bottom"] = x.y_bottom.str();
        } else {
          j["left"] = to_json(x.left);
          j["right"] = to_json(x.right);
        }
      },
      o);
  return j;
}

Object object_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("object line is not a JSON object");
  const json& kind = sub(j, "kind");
  if (!kind.is_string()) throw std::invalid_argument("'kind' must be a string");
  switch (parse_kind(kind.get<std::string>())) {
    case ObjectKind::interval:
      return Interval(coord_field(j, "lo"), coord_field(j, "hi"));
    case ObjectKind::perm_segment:
      return PermSegment{coord_field(j, "top"), coord_field(j, "bottom")};
    case ObjectKind::unit_rect:
      return UnitRect{interval_field(sub(j, "x")), coord_field(j, "y_bottom")};
    case ObjectKind::two_interval:
      return TwoInterval(interval_field(sub(j, "left")), interval_field(sub(j, "right")));
  }
  throw std::invalid_argument("unhandled object kind");
}

void write_jsonl(std::ostream& out, const ObjectStream& stream) {
  json header;
  if (const auto k = stream.uniform_kind()) {
    header["kind"] = kind_name(*k);
  } else {
    header["kind"] = stream.empty() ? "empty" : "mixed";
  }
  header["count"] = stream.size();
  if (stream.has_players()) {
    json players = json::array();
    for (const auto& p : stream.players()) {
      players.push_back(json{{"player", p.player}, {"begin", p.begin}, {"end", p.end}});
    }
    header["players"] = std::move(players);
  }
  out << header.dump() << '\n';
  for (const auto& o : stream.objects()) out << to_json(o).dump() << '\n';
}

ObjectStream read_jsonl(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  json header;
  bool have_header = false;
  ObjectStream stream;
  std::optional<std::string> declared_kind;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!have_header) {
      if (!j.is_object() || !j.contains("kind") || !j.contains("count")) {
        throw FormatError(lineno, "first line must be a header with 'kind' and 'count'");
      }
      header = std::move(j);
      have_header = true;
      declared_kind = header["kind"].get<std::string>();
      continue;
    }
    try {
      Object o = object_from_json(j);
      if (*declared_kind != "mixed" && kind_name(kind_of(o)) != *declared_kind) {
        throw std::invalid_argument("object kind '" + std::string(kind_name(kind_of(o))) +
                                    "' does not match header kind '" + *declared_kind + "'");
      }
      stream.push_back(std::move(o));
    } catch (const std::exception& e) {
      throw FormatError(lineno, e.what());
    }
  }
  if (!have_header) throw FormatError(lineno + 1, "missing header line");
  const auto count = header["count"];
  if (!count.is_number_unsigned() || count.get<std::size_t>() != stream.size()) {
    throw FormatError(lineno, "header count does not match number of objects");
  }
  if (header.contains("players")) {
    std::vector<PlayerRange> players;
    try {
      for (const auto& p : header["players"]) {
        players.push_back(PlayerRange{p.at("player").get<int>(), p.at("begin").get<std::size_t>(),
                                      p.at("end").get<std::size_t>()});
      }
      stream.set_players(std::move(players));
    } catch (const std::exception& e) {
      throw FormatError(1, std::string("bad player boundaries: ") + e.what());
    }
  }
  return stream;
}

std::string to_jsonl(const ObjectStream& stream) {
  std::ostringstream out;
  write_jsonl(out, stream);
  return out.str();
}

ObjectStream from_jsonl(const std::string& text) {
  std::istringstream in(text);
  return read_jsonl(in);
}

ObjectStream codec_roundtrip(const ObjectStream& stream) { return from_jsonl(to_jsonl(stream)); }

json to_json(const StreamStats& stats) {
  return json{{"items", stats.items},
              {"passes", stats.passes},
              {"peak_state_bits", stats.peak_state_bits},
              {"handoff_bits", stats.handoff_bits},
              {"pass_peak_bits", stats.pass_peak_bits}};
}

}  // namespace geostream
