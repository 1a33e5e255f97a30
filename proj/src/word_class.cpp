#include "dynamik/word_class.hpp"

#include <array>
#include <utility>

namespace dynamik {
namespace {

constexpr std::array<std::pair<Subkind, std::string_view>, 16> kNames{{
    {Subkind::Noun, "noun"},
    {Subkind::ProperNoun, "proper_noun"},
    {Subkind::Verb, "verb"},
    {Subkind::Adjective, "adjective"},
    {Subkind::Adverb, "adverb"},
    {Subkind::Negative, "negative"},
    {Subkind::Numeral, "numeral"},
    {Subkind::Determiner, "determiner"},
    {Subkind::Preposition, "preposition"},
    {Subkind::Conjunction, "conjunction"},
    {Subkind::Pronoun, "pronoun"},
    {Subkind::Auxiliary, "auxiliary"},
    {Subkind::Particle, "particle"},
    {Subkind::Interjection, "interjection"},
    {Subkind::OtherClosed, "other_closed"},
    {Subkind::Punctuation, "punctuation"},
}};

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Content:
      return "content";
    case Family::Function:
      return "function";
    case Family::Punct:
      return "punct";
  }
  return "?";
}

std::string_view to_string(Subkind kind) noexcept {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

std::optional<Subkind> parse_subkind(std::string_view name) noexcept {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

}  // namespace dynamik
