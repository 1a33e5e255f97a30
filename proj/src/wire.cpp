#include "dynamik/wire.hpp"

#include <cmath>

#include "dynamik/error.hpp"
#include "json.hpp"

namespace dynamik::wire {
namespace {

using ordered_json = nlohmann::ordered_json;

// Whole sizes go out as integers ("12", not "12.0").
ordered_json size_value(double pt) {
  if (std::isfinite(pt) && pt == std::floor(pt) && std::fabs(pt) < 1e15) return static_cast<std::int64_t>(pt);
  return pt;
}

ordered_json parse_object(std::string_view message, std::string_view expected_type) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(message);
  } catch (const ordered_json::parse_error&) {
    throw ParseError(0, "message is not valid JSON");
  }
  if (!doc.is_object()) throw ParseError(0, "message must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string() || doc["type"].get<std::string>() != expected_type)
    throw ParseError(0, "expected a message of type '" + std::string(expected_type) + "'");
  return doc;
}

}  // namespace

std::string frame_message(const StyledFrame& frame) {
  ordered_json j;
  j["type"] = "frame";
  j["seq"] = frame.seq;
  j["t_ms"] = frame.t_ms;
  j["mode"] = std::string(to_string(frame.mode));
  auto cues = ordered_json::array();
  for (const auto& cue : frame.cues) {
    ordered_json c;
    c["text"] = cue.text;
    c["size_pt"] = size_value(cue.size_pt);
    c["visible"] = cue.visible;
    c["is_keyword"] = cue.is_keyword;
    cues.push_back(std::move(c));
  }
  j["cues"] = std::move(cues);
  j["overrun"] = frame.overrun;
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

std::string error_message(std::string_view reason) {
  ordered_json j;
  j["type"] = "error";
  j["reason"] = std::string(reason);
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

StyledFrame parse_frame_message(std::string_view message) {
  const auto doc = parse_object(message, "frame");
  try {
    StyledFrame frame;
    frame.seq = doc.at("seq").get<std::uint64_t>();
    frame.t_ms = doc.at("t_ms").get<std::int64_t>();
    const auto mode = parse_mode(doc.at("mode").get<std::string>());
    if (!mode) throw ParseError(0, "unknown mode");
    frame.mode = *mode;
    for (const auto& c : doc.at("cues"))
      frame.cues.push_back(Cue{c.at("text").get<std::string>(), c.at("size_pt").get<double>(),
                               c.at("visible").get<bool>(), c.at("is_keyword").get<bool>()});
    frame.overrun = doc.at("overrun").get<bool>();
    return frame;
  } catch (const ordered_json::exception& e) {
    throw ParseError(0, std::string("malformed frame message: ") + e.what());
  }
}

std::string control_message(const ControlMsg& control) {
  ordered_json j;
  j["type"] = "control";
  if (control.mode) j["mode"] = std::string(to_string(*control.mode));
  if (control.keyword_size_pt) j["keyword_size_pt"] = size_value(*control.keyword_size_pt);
  if (control.function_size_pt) j["function_size_pt"] = size_value(*control.function_size_pt);
  return j.dump();
}

ControlMsg parse_control(std::string_view message) {
  const auto doc = parse_object(message, "control");
  ControlMsg control;
  if (doc.contains("mode")) {
    const auto& m = doc["mode"];
    if (!m.is_string()) throw ParseError(0, "'mode' must be a string");
    control.mode = parse_mode(m.get<std::string>());
    if (!control.mode) throw ParseError(0, "unknown mode '" + m.get<std::string>() + "'");
  }
  auto size_field = [&](const char* name, std::optional<double>& out) {
    if (!doc.contains(name)) return;
    if (!doc[name].is_number()) throw ParseError(0, std::string("'") + name + "' must be a number");
    out = doc[name].get<double>();
  };
  size_field("keyword_size_pt", control.keyword_size_pt);
  size_field("function_size_pt", control.function_size_pt);
  if (!control.mode && !control.keyword_size_pt && !control.function_size_pt)
    throw ParseError(0, "control message sets nothing");
  return control;
}

Settings apply_control(const Settings& current, const ControlMsg& control) {
  Settings next = current;
  if (control.mode) next.mode = *control.mode;
  if (control.keyword_size_pt) next.style.keyword_size_pt = *control.keyword_size_pt;
  if (control.function_size_pt) next.style.function_size_pt = *control.function_size_pt;
  next.style.validate();
  return next;
}

}  // namespace dynamik::wire
