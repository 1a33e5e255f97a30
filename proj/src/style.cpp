#include "dynamik/style.hpp"

#include "dynamik/error.hpp"
#include "utf8.hpp"

namespace dynamik {
namespace {

bool is_opening(std::string_view text) {
  return text == "(" || text == "[" || text == "{" || text == "\xE2\x80\x9C" /* “ */;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Normal:
      return "normal";
    case Mode::Keyword:
      return "keyword";
    case Mode::Dynamik:
      return "dynamik";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  const auto folded = fold_case(name);
  if (folded == "normal") return Mode::Normal;
  if (folded == "keyword") return Mode::Keyword;
  if (folded == "dynamik") return Mode::Dynamik;
  return std::nullopt;
}

void StyleConfig::validate() const {
  if (!(keyword_size_pt > 0.0) || !(function_size_pt > 0.0))
    throw ValidationError("font sizes must be positive");
  if (function_size_pt > keyword_size_pt)
    throw ValidationError("function_size_pt must not exceed keyword_size_pt");
}

StyleConfig default_style() { return StyleConfig{}; }

bool is_punctuation_text(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    if (!d) return true;
    if (utf8::is_alnum(d->code_point)) return false;
    pos += d->length;
  }
  return true;
}

std::vector<Cue> apply_mode(std::span<const ClassifiedToken> tokens, Mode mode, const StyleConfig& cfg) {
  // Keyword status each token is styled by: its own, or its anchor word's.
  std::vector<bool> styled_as_keyword(tokens.size(), false);
  std::optional<bool> last_word;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].word_class.family() != Family::Punct) {
      last_word = tokens[i].is_keyword();
      styled_as_keyword[i] = *last_word;
    } else if (last_word) {
      styled_as_keyword[i] = *last_word;
    }
  }
  // Leading punctuation follows the first word.
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].word_class.family() != Family::Punct) {
      for (std::size_t j = 0; j < i; ++j) styled_as_keyword[j] = tokens[i].is_keyword();
      break;
    }
  }

  std::vector<Cue> cues;
  cues.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Cue cue{tokens[i].token.surface, cfg.keyword_size_pt, true, tokens[i].is_keyword()};
    switch (mode) {
      case Mode::Normal:
        break;
      case Mode::Keyword:
        cue.visible = styled_as_keyword[i];
        break;
      case Mode::Dynamik:
        cue.size_pt = styled_as_keyword[i] ? cfg.keyword_size_pt : cfg.function_size_pt;
        break;
    }
    cues.push_back(std::move(cue));
  }
  return cues;
}

void for_each_visible(std::span<const Cue> cues, const std::function<void(const Cue&, bool)>& visit) {
  bool glue_next = true;
  for (const auto& cue : cues) {
    if (!cue.visible) continue;
    const bool punct = is_punctuation_text(cue.text);
    const bool opening = punct && is_opening(cue.text);
    visit(cue, !glue_next && (!punct || opening));
    glue_next = opening;
  }
}

std::string visible_text(std::span<const Cue> cues) {
  std::string out;
  for_each_visible(cues, [&](const Cue& cue, bool space) {
    if (space) out.push_back(' ');
    out += cue.text;
  });
  return out;
}

}  // namespace dynamik
