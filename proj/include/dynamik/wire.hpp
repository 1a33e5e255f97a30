#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dynamik/scheduler.hpp"
#include "dynamik/style.hpp"

namespace dynamik::wire {

// Messages are compact JSON objects. Field names and order below are fixed;
// raw TCP appends a single '\n' to each, WebSocket sends each as one
// text message.
//
//   {"type":"frame","seq":N,"t_ms":N,"mode":"dynamik",
//    "cues":[{"text":"the","size_pt":12,"visible":true,"is_keyword":false}],
//    "overrun":false}
//   {"type":"control","mode":"keyword","keyword_size_pt":18,"function_size_pt":12}
//   {"type":"error","reason":"..."}

std::string frame_message(const StyledFrame& frame);
std::string error_message(std::string_view reason);

/// Inverse of frame_message (analysis time is not carried and reads as 0).
/// Throws ParseError.
StyledFrame parse_frame_message(std::string_view message);

struct ControlMsg {
  std::optional<Mode> mode;
  std::optional<double> keyword_size_pt;
  std::optional<double> function_size_pt;
};

std::string control_message(const ControlMsg& control);

/// Throws ParseError for malformed JSON, a wrong "type", unknown modes,
/// non-numeric sizes or a message that sets nothing.
ControlMsg parse_control(std::string_view message);

/// Returns `current` with the control applied. Throws ValidationError when
/// the result breaks the style invariants.
Settings apply_control(const Settings& current, const ControlMsg& control);

}  // namespace dynamik::wire
