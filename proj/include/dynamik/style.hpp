#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynamik/classify.hpp"

namespace dynamik {

enum class Mode {
  Normal,   ///< every word at full size
  Keyword,  ///< function words hidden
  Dynamik,  ///< function words shrunk
};

std::string_view to_string(Mode mode) noexcept;
/// Case-insensitive: "normal", "keyword", "dynamik".
std::optional<Mode> parse_mode(std::string_view name) noexcept;

struct Rgba {
  std::uint8_t r = 0, g = 0, b = 0, a = 255;
  friend bool operator==(const Rgba&, const Rgba&) = default;
};

struct StyleConfig {
  double keyword_size_pt = 18.0;
  double function_size_pt = 12.0;
  Rgba color{255, 128, 130, 255};
  Rgba background{0, 0, 0, 255};
  std::string typeface_name = "ZenMaruGothic Medium";  // informational only

  /// Throws ValidationError unless 0 < function_size_pt <= keyword_size_pt.
  void validate() const;
  double size_ratio() const noexcept { return function_size_pt / keyword_size_pt; }

  friend bool operator==(const StyleConfig&, const StyleConfig&) = default;
};

StyleConfig default_style();

struct Cue {
  std::string text;
  double size_pt = 0.0;
  bool visible = true;
  bool is_keyword = false;

  friend bool operator==(const Cue&, const Cue&) = default;
};

struct StyledFrame {
  std::uint64_t seq = 0;
  std::int64_t t_ms = 0;
  Mode mode = Mode::Normal;
  std::vector<Cue> cues;
  bool overrun = false;
  /// Wall time spent tokenizing, classifying and styling this frame.
  std::chrono::microseconds analysis{0};
};

/// One cue per token, in token order. Punctuation takes the visibility and
/// size of the nearest preceding word, or of the following word when it
/// leads the text; with no word at all it is styled like a function word.
std::vector<Cue> apply_mode(std::span<const ClassifiedToken> tokens, Mode mode, const StyleConfig& cfg);

/// True when `text` has no letter or digit.
bool is_punctuation_text(std::string_view text);

/// Visits visible cues in order, saying whether a space goes before each:
/// words are separated by a space, punctuation hugs the word before it and
/// opening brackets hug the word after.
void for_each_visible(std::span<const Cue> cues, const std::function<void(const Cue&, bool space_before)>& visit);

/// Joins the visible cues into display text using for_each_visible spacing.
std::string visible_text(std::span<const Cue> cues);

}  // namespace dynamik
