#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dynamik/token.hpp"

namespace dynamik {

/// Splits English text into word, numeral and punctuation tokens.
///
/// Letters, digits and apostrophes bind into one word, as do hyphens,
/// periods, commas and slashes when they sit between two alphanumerics
/// (periods, commas and slashes only between digits). Whitespace separates;
/// every other character is a punctuation token of its own. Spans are byte
/// offsets into `text`.
std::vector<Token> tokenize(std::string_view text);

/// Incremental tokenizer for text arriving in fragments.
///
/// A token is emitted once the characters after it prove it cannot grow.
/// Fragments may split words and multi-byte UTF-8 sequences. Spans are
/// offsets into the concatenation of every fragment fed so far.
class StreamTokenizer {
 public:
  /// Appends a fragment and returns the tokens it confirms.
  std::vector<Token> feed(std::string_view fragment);

  /// Emits whatever is still pending and resets the tail.
  std::vector<Token> flush();

  std::string_view pending() const noexcept { return buffer_; }
  std::size_t consumed() const noexcept { return base_; }

 private:
  std::vector<Token> drain(bool at_end);

  std::string buffer_;
  std::size_t base_ = 0;
};

}  // namespace dynamik
