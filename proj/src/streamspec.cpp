#include "longrun/streamspec.hpp"

#include <vector>

namespace longrun {

namespace {

using nlohmann::json;

std::vector<Rational> rational_array(const json& arr, const char* field) {
  if (!arr.is_array())
    throw StreamSpecError(std::string("field '") + field + "' must be an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    try {
      out.push_back(rational_from_json(item));
    } catch (const std::exception& e) {
      throw StreamSpecError(std::string("field '") + field + "': " + e.what());
    }
  }
  return out;
}

BoundedStream parse_generator(const json& spec) {
  if (!spec.contains("name") || !spec.at("name").is_string())
    throw StreamSpecError("field 'name' must be a string");
  const std::string name = spec.at("name").get<std::string>();
  const json params = spec.value("params", json::object());
  if (!params.is_object()) throw StreamSpecError("field 'params' must be an object");
  if (name == "harmonic_shift") {
    if (!params.contains("c"))
      throw StreamSpecError("generator 'harmonic_shift' needs param 'c'");
    double c = 0.0;
    try {
      c = params.at("c").is_number() ? params.at("c").get<double>()
                                     : to_double(rational_from_json(params.at("c")));
    } catch (const std::exception& e) {
      throw StreamSpecError(std::string("param 'c': ") + e.what());
    }
    return harmonic_shift(c);
  }
  if (name == "doubling_blocks") return doubling_blocks();
  throw StreamSpecError("unknown generator '" + name + "'");
}

}  // namespace

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return rational_from_decimal(value.get<double>());
  throw StreamSpecError("rational entries must be strings or numbers");
}

AnyStream parse_stream_spec(const nlohmann::json& spec) {
  if (!spec.is_object()) throw StreamSpecError("stream spec must be a JSON object");
  if (!spec.contains("type") || !spec.at("type").is_string())
    throw StreamSpecError("field 'type' must be a string");
  const std::string type = spec.at("type").get<std::string>();
  if (type == "ep") {
    if (!spec.contains("cycle")) throw StreamSpecError("field 'cycle' is required");
    std::vector<Rational> head;
    if (spec.contains("head")) head = rational_array(spec.at("head"), "head");
    std::vector<Rational> cycle = rational_array(spec.at("cycle"), "cycle");
    if (cycle.empty()) throw StreamSpecError("field 'cycle' must be non-empty");
    return EpStream::make(std::move(head), std::move(cycle));
  }
  if (type == "gen") return parse_generator(spec);
  throw StreamSpecError("field 'type' must be \"ep\" or \"gen\"");
}

AnyStream parse_stream_spec_text(const std::string& text) {
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StreamSpecError(std::string("invalid JSON: ") + e.what());
  }
  return parse_stream_spec(spec);
}

nlohmann::json stream_spec_json(const EpStream& s) {
  nlohmann::json head = nlohmann::json::array();
  for (const Rational& r : s.head()) head.push_back(format_rational(r));
  nlohmann::json cycle = nlohmann::json::array();
  for (const Rational& r : s.cycle()) cycle.push_back(format_rational(r));
  return nlohmann::json{{"type", "ep"}, {"head", head}, {"cycle", cycle}};
}

}  // namespace longrun
