#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "geostream/geometry.hpp"
#include "geostream/streamkit.hpp"

namespace geostream {

using json = nlohmann::ordered_json;

// Instance files are JSONL. Line 1 is a header
//   {"kind": "<object kind>|mixed|empty", "count": N, "players": [...]}
// and each following line holds one object tagged with "kind". Coordinates
// are strings: a decimal integer or "p/q".

json to_json(const Interval& iv);
json to_json(const Object& o);
/// Throws std::invalid_argument on a malformed object.
Object object_from_json(const json& j);

void write_jsonl(std::ostream& out, const ObjectStream& stream);
/// Throws FormatError with the offending line number.
ObjectStream read_jsonl(std::istream& in);

std::string to_jsonl(const ObjectStream& stream);
ObjectStream from_jsonl(const std::string& text);

/// Serializes to JSONL and parses the result back.
ObjectStream codec_roundtrip(const ObjectStream& stream);

json to_json(const StreamStats& stats);

}  // namespace geostream
