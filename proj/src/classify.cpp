#include "dynamik/classify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "utf8.hpp"

namespace dynamik {
namespace {

constexpr std::array<std::string_view, 6> kHostClitics{"'s", "'re", "'ve", "'ll", "'d", "'m"};

constexpr std::array<std::string_view, 46> kNumberWords{
    "zero",     "one",      "two",      "three",    "four",      "five",      "six",
    "seven",    "eight",    "nine",     "ten",      "eleven",    "twelve",    "thirteen",
    "fourteen", "fifteen",  "sixteen",  "seventeen", "eighteen", "nineteen",  "twenty",
    "thirty",   "forty",    "fifty",    "sixty",    "seventy",   "eighty",    "ninety",
    "hundred",  "thousand", "million",  "billion",  "trillion",  "first",     "second",
    "third",    "fourth",   "fifth",    "sixth",    "seventh",   "eighth",    "ninth",
    "tenth",    "half",     "dozen",    "twice"};

constexpr std::array<std::string_view, 8> kVerbSuffixes{"ing", "ed", "ize", "ise", "izes", "ises", "ify", "ified"};
constexpr std::array<std::string_view, 13> kAdjectiveSuffixes{
    "ous", "ful", "ive", "able", "ible", "al", "ic", "ical", "less", "ish", "ary", "ient", "est"};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_upper_ascii(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower_ascii(char c) { return c >= 'a' && c <= 'z'; }

bool is_acronym(std::string_view surface) {
  int upper = 0;
  for (const char c : surface) {
    if (is_lower_ascii(c)) return false;
    if (is_upper_ascii(c)) ++upper;
  }
  return upper >= 2;
}

bool is_capitalised(std::string_view surface) { return !surface.empty() && is_upper_ascii(surface.front()); }

bool is_terminal(std::string_view punct) { return punct == "." || punct == "!" || punct == "?"; }

// True when no word token precedes `index` in the current sentence.
bool starts_sentence(std::span<const Token> tokens, std::size_t index) {
  while (index > 0) {
    const auto& prev = tokens[--index];
    if (prev.is_word_like()) return false;
    if (is_terminal(prev.surface)) return true;
  }
  return true;
}

// Strips a non-negative clitic ("that's" -> "that"); empty when none applies.
std::string_view clitic_host(std::string_view folded) {
  for (const auto clitic : kHostClitics)
    if (folded.size() > clitic.size() && ends_with(folded, clitic))
      return folded.substr(0, folded.size() - clitic.size());
  return {};
}

Subkind open_class(std::string_view folded, std::optional<Subkind> previous) {
  if (folded.size() > 4 && ends_with(folded, "ly")) return Subkind::Adverb;
  // After a modal, auxiliary or infinitive marker the next open-class word is
  // almost always a verb ("can damage", "to bring").
  if (previous == Subkind::Auxiliary || previous == Subkind::Particle || previous == Subkind::Negative)
    return Subkind::Verb;
  for (const auto suffix : kVerbSuffixes)
    if (folded.size() > suffix.size() + 2 && ends_with(folded, suffix)) return Subkind::Verb;
  for (const auto suffix : kAdjectiveSuffixes)
    if (folded.size() > suffix.size() + 2 && ends_with(folded, suffix)) return Subkind::Adjective;
  return Subkind::Noun;
}

}  // namespace

bool is_negative(std::string_view surface, const Lexicon& lexicon) {
  const auto folded = fold_case(surface);
  if (lexicon.negatives().count(folded)) return true;
  for (const auto& form : lexicon.negatives()) {
    // Entries written as clitics ("n't") match as suffixes of a longer word.
    if (form.find('\'') == std::string::npos) continue;
    if (folded.size() > form.size() && ends_with(folded, form)) return true;
  }
  return false;
}

std::vector<WordClass> LexiconTagger::tag(std::span<const Token> tokens) const {
  std::vector<WordClass> out;
  out.reserve(tokens.size());
  std::optional<Subkind> previous_word;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (token.kind == TokenKind::Punctuation) {
      out.push_back({Subkind::Punctuation});
      continue;
    }

    const auto folded = fold_case(token.surface);
    Subkind kind = Subkind::Noun;

    if (is_negative(token.surface, lexicon_)) {
      kind = Subkind::Negative;
    } else if (is_acronym(token.surface)) {
      kind = Subkind::ProperNoun;
    } else if (auto hit = lexicon_.lookup(folded)) {
      kind = *hit;
    } else if (auto host = clitic_host(folded); !host.empty() && lexicon_.lookup(host)) {
      kind = *lexicon_.lookup(host);
    } else {
      const auto base = clitic_host(folded).empty() ? std::string_view(folded) : clitic_host(folded);
      if (token.kind == TokenKind::Numeral ||
          std::find(kNumberWords.begin(), kNumberWords.end(), base) != kNumberWords.end()) {
        kind = Subkind::Numeral;
      } else if (is_capitalised(token.surface) && !starts_sentence(tokens, i)) {
        kind = Subkind::ProperNoun;
      } else {
        kind = open_class(base, previous_word);
      }
    }

    out.push_back({kind});
    previous_word = kind;
  }
  return out;
}

std::vector<ClassifiedToken> classify_tokens(std::span<const Token> tokens, const Tagger& tagger,
                                             const Lexicon& negatives) {
  auto classes = tagger.tag(tokens);
  if (classes.size() != tokens.size()) throw std::logic_error("tagger returned a different number of classes");

  std::vector<ClassifiedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool punct = tokens[i].kind == TokenKind::Punctuation;
    if (punct != (classes[i].subkind == Subkind::Punctuation))
      throw std::logic_error("tagger disagrees with tokenizer on punctuation");
    // Negation always wins, whatever the tagger says.
    if (!punct && classes[i].subkind != Subkind::Negative && is_negative(tokens[i].surface, negatives))
      classes[i] = {Subkind::Negative};
    out.push_back({tokens[i], classes[i]});
  }
  return out;
}

std::vector<ClassifiedToken> classify_tokens(std::span<const Token> tokens, const Lexicon& lexicon) {
  return classify_tokens(tokens, LexiconTagger(lexicon), lexicon);
}

}  // namespace dynamik
