#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynamik/classify.hpp"
#include "dynamik/style.hpp"

namespace dynamik {

/// Splits an untimed text into one frame per sentence (a run of tokens ending
/// in . ! or ?). Frame i starts at `ms_per_word` times the number of words
/// before it. Sentences without a word are folded into the previous frame.
std::vector<StyledFrame> sentence_frames(std::span<const ClassifiedToken> tokens, Mode mode, const StyleConfig& cfg,
                                         std::int64_t ms_per_word = 300);

/// WebVTT with one cue per frame. Full-size words sit in a `keyword` cue
/// class and reduced-size words in `func`; the numeric sizes, colours and
/// typeface live only in the NOTE and STYLE blocks. Hidden cues are left
/// out of the text. A cue ends where the next frame starts; the last one
/// lasts `linger_ms`.
///
/// Throws ValidationError unless frame times strictly increase.
std::string to_webvtt(std::span<const StyledFrame> frames, const StyleConfig& cfg, std::int64_t linger_ms = 2000);

/// Advanced SubStation Alpha with one Dialogue event per frame. Each change
/// of size opens a `{\fsN}` override; the style line carries the colour
/// (as &HAABBGGRR) and the typeface. Brace and backslash characters in cue
/// text are replaced with ( ) and / since the format cannot escape them.
///
/// Throws ValidationError unless frame times strictly increase.
std::string to_ass(std::span<const StyledFrame> frames, const StyleConfig& cfg, std::int64_t linger_ms = 2000);

}  // namespace dynamik
