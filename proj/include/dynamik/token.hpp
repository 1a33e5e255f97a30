#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace dynamik {

enum class TokenKind { Word, Numeral, Punctuation };

/// Half-open byte range into the UTF-8 source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::Word;
  std::optional<std::int64_t> time_ms;

  bool is_word_like() const noexcept { return kind != TokenKind::Punctuation; }
  friend bool operator==(const Token&, const Token&) = default;
};

const char* to_string(TokenKind kind) noexcept;

}  // namespace dynamik
