#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

#include "longrun/stream.hpp"

namespace longrun {

// Stream descriptions exchanged as JSON:
//   {"type": "ep", "head": [...], "cycle": [...]}
//     entries are rational strings "p/q", integers, or decimal literals with
//     at most 12 fractional digits (parsed exactly)
//   {"type": "gen", "name": "...", "params": {...}, "bound": B}
//     named bounded generator; builtins are harmonic_shift (param c) and
//     doubling_blocks (no params)
// Malformed input raises StreamSpecError with a message naming the offending
// field.

struct StreamSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyStream = std::variant<EpStream, BoundedStream>;

// Parses one spec object. Throws StreamSpecError.
AnyStream parse_stream_spec(const nlohmann::json& spec);
AnyStream parse_stream_spec_text(const std::string& text);

// Exact serialization; parsing the result yields an equal stream. Rationals
// print as "p/q" (plain "p" for integers).
nlohmann::json stream_spec_json(const EpStream& s);

// Parses a single rational entry (string, integer, or exact decimal).
Rational rational_from_json(const nlohmann::json& value);

}  // namespace longrun
