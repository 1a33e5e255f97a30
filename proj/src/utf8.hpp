#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace dynamik::utf8 {

struct Decoded {
  char32_t code_point;
  std::size_t length;
};

/// Decodes the sequence starting at `pos`. Returns nullopt when the sequence
/// is truncated by the end of `text`. Malformed bytes decode as U+FFFD of
/// length one.
std::optional<Decoded> decode(std::string_view text, std::size_t pos);

bool is_space(char32_t c) noexcept;
bool is_digit(char32_t c) noexcept;
bool is_letter(char32_t c) noexcept;
inline bool is_alnum(char32_t c) noexcept { return is_letter(c) || is_digit(c); }
bool is_apostrophe(char32_t c) noexcept;

/// Number of code points in `text`; malformed bytes count as one each.
std::size_t code_point_count(std::string_view text);

}  // namespace dynamik::utf8
