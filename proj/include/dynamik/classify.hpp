#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "dynamik/lexicon.hpp"
#include "dynamik/token.hpp"
#include "dynamik/word_class.hpp"

namespace dynamik {

struct ClassifiedToken {
  Token token;
  WordClass word_class;

  bool is_keyword() const noexcept { return word_class.is_keyword(); }
};

/// Assigns one word class per token. Implementations must return exactly
/// `tokens.size()` classes and give punctuation tokens Subkind::Punctuation.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<WordClass> tag(std::span<const Token> tokens) const = 0;
};

/// Deterministic lexicon-first tagger.
///
/// Order of decisions for a word token:
///   1. negation forms and n't clitics are Negative;
///   2. all-capital acronyms ("WHO", "UNICEF") are ProperNoun;
///   3. lexicon hits (also on the host of a 's/'re/'ve/'ll/'d/'m clitic)
///      take the lexicon's function subkind;
///   4. digits and number words are Numeral;
///   5. capitalised words that do not start a sentence are ProperNoun;
///   6. everything else is open class, guessed from context and suffix,
///      defaulting to Noun.
class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(const Lexicon& lexicon) : lexicon_(lexicon) {}

  std::vector<WordClass> tag(std::span<const Token> tokens) const override;

 private:
  const Lexicon& lexicon_;
};

/// Runs `tagger`, then forces every token `negatives` calls negative to
/// Subkind::Negative.
std::vector<ClassifiedToken> classify_tokens(std::span<const Token> tokens, const Tagger& tagger,
                                             const Lexicon& negatives = Lexicon::builtin());
std::vector<ClassifiedToken> classify_tokens(std::span<const Token> tokens, const Lexicon& lexicon);

/// True for listed negation forms and for words ending in a listed clitic
/// pattern (entries such as "n't" in the negatives section).
bool is_negative(std::string_view surface, const Lexicon& lexicon = Lexicon::builtin());

}  // namespace dynamik
