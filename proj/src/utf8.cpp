#include "utf8.hpp"

namespace dynamik::utf8 {

std::optional<Decoded> decode(std::string_view text, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return Decoded{lead, 1};

  std::size_t length = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    cp = lead & 0x07;
  } else {
    return Decoded{0xFFFD, 1};
  }

  for (std::size_t i = 1; i < length; ++i) {
    if (pos + i >= text.size()) return std::nullopt;
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) return Decoded{0xFFFD, 1};
    cp = (cp << 6) | (cont & 0x3F);
  }
  return Decoded{cp, length};
}

bool is_space(char32_t c) noexcept {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_digit(char32_t c) noexcept { return c >= U'0' && c <= U'9'; }

bool is_apostrophe(char32_t c) noexcept { return c == U'\'' || c == 0x2019; }

bool is_letter(char32_t c) noexcept {
  if (c < 0x80) return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
  // Latin-1 punctuation and symbols, plus the two arithmetic signs.
  if (c < 0xC0) return c == 0xAA || c == 0xB5 || c == 0xBA;
  if (c == 0xD7 || c == 0xF7) return false;
  // Combining marks attach to the preceding letter.
  if (c >= 0x0300 && c <= 0x036F) return true;
  // General punctuation, currency, letterlike arrows, math, box drawing,
  // dingbats, CJK punctuation, fullwidth ASCII punctuation, specials.
  if (c >= 0x2000 && c <= 0x2BFF) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c >= 0xFF1A && c <= 0xFF20) return false;
  if (c >= 0xFFF0 && c <= 0xFFFF) return false;
  // Emoji and pictographs.
  if (c >= 0x1F000 && c <= 0x1FAFF) return false;
  return true;
}

std::size_t code_point_count(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < text.size(); ++count) {
    const auto d = decode(text, pos);
    pos += d ? d->length : 1;
  }
  return count;
}

}  // namespace dynamik::utf8
