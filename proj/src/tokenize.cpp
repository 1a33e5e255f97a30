#include "dynamik/tokenize.hpp"

#include "utf8.hpp"

namespace dynamik {
namespace {

bool is_hyphen(char32_t c) { return c == U'-' || c == 0x2010 || c == 0x2011; }

bool is_numeric_joiner(char32_t c) { return c == U'.' || c == U',' || c == U'/'; }

bool binds(char32_t prev, char32_t joiner, char32_t next) {
  if (utf8::is_apostrophe(joiner)) return utf8::is_alnum(prev) && utf8::is_letter(next);
  if (is_hyphen(joiner)) return utf8::is_alnum(prev) && utf8::is_alnum(next);
  if (is_numeric_joiner(joiner)) return utf8::is_digit(prev) && utf8::is_digit(next);
  return false;
}

bool could_join(char32_t c) {
  return utf8::is_apostrophe(c) || is_hyphen(c) || is_numeric_joiner(c);
}

struct Scan {
  std::vector<Token> tokens;
  // Bytes of the input fully accounted for; everything after is pending.
  std::size_t resume = 0;
};

// Scans `text`; with `at_end` false, stops before the first token whose
// right edge still depends on characters not yet seen.
Scan scan(std::string_view text, bool at_end) {
  Scan out;
  std::size_t pos = 0;

  auto peek = [&](std::size_t at) -> std::optional<utf8::Decoded> {
    if (at >= text.size()) return std::nullopt;
    if (auto d = utf8::decode(text, at)) return d;
    // A sequence cut short by the end of the input.
    if (at_end) return utf8::Decoded{0xFFFD, 1};
    return std::nullopt;
  };
  auto emit = [&](std::size_t start, std::size_t end, TokenKind kind) {
    out.tokens.push_back(Token{std::string(text.substr(start, end - start)),
                               Span{start, end}, kind, std::nullopt});
  };

  while (pos < text.size()) {
    const auto head = peek(pos);
    if (!head) break;  // truncated multi-byte sequence, wait for more bytes

    if (utf8::is_space(head->code_point)) {
      pos += head->length;
      continue;
    }
    if (!utf8::is_alnum(head->code_point)) {
      emit(pos, pos + head->length, TokenKind::Punctuation);
      pos += head->length;
      continue;
    }

    const std::size_t start = pos;
    const auto kind = utf8::is_digit(head->code_point) ? TokenKind::Numeral : TokenKind::Word;
    char32_t prev = head->code_point;
    std::size_t end = pos + head->length;
    bool confirmed = true;

    for (;;) {
      const auto cur = peek(end);
      if (!cur) {
        confirmed = at_end;
        break;
      }
      if (utf8::is_alnum(cur->code_point)) {
        prev = cur->code_point;
        end += cur->length;
        continue;
      }
      if (!could_join(cur->code_point)) break;
      if (is_numeric_joiner(cur->code_point) && !utf8::is_digit(prev)) break;
      const auto next = peek(end + cur->length);
      if (!next) {
        confirmed = at_end;
        break;
      }
      if (!binds(prev, cur->code_point, next->code_point)) break;
      prev = next->code_point;
      end += cur->length + next->length;
    }

    if (!confirmed) {
      out.resume = start;
      return out;
    }
    emit(start, end, kind);
    pos = end;
  }
  out.resume = pos;
  return out;
}

}  // namespace

const char* to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word:
      return "word";
    case TokenKind::Numeral:
      return "numeral";
    case TokenKind::Punctuation:
      return "punctuation";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) { return scan(text, true).tokens; }

std::vector<Token> StreamTokenizer::feed(std::string_view fragment) {
  buffer_.append(fragment);
  return drain(false);
}

std::vector<Token> StreamTokenizer::flush() { return drain(true); }

std::vector<Token> StreamTokenizer::drain(bool at_end) {
  auto result = scan(buffer_, at_end);
  for (auto& token : result.tokens) {
    token.span.start += base_;
    token.span.end += base_;
  }
  buffer_.erase(0, result.resume);
  base_ += result.resume;
  return std::move(result.tokens);
}

}  // namespace dynamik
