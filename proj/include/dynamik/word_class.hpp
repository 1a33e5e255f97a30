#pragma once

#include <optional>
#include <string_view>

namespace dynamik {

enum class Family { Content, Function, Punct };

enum class Subkind {
  // content
  Noun,
  ProperNoun,
  Verb,
  Adjective,
  Adverb,
  Negative,
  Numeral,
  // function
  Determiner,
  Preposition,
  Conjunction,
  Pronoun,
  Auxiliary,
  Particle,
  Interjection,
  OtherClosed,
  // punct
  Punctuation,
};

constexpr Family family_of(Subkind kind) noexcept {
  if (kind == Subkind::Punctuation) return Family::Punct;
  if (kind >= Subkind::Determiner) return Family::Function;
  return Family::Content;
}

/// The family is derived from the subkind, so the two can never disagree.
struct WordClass {
  Subkind subkind = Subkind::Noun;

  constexpr Family family() const noexcept { return family_of(subkind); }
  constexpr bool is_keyword() const noexcept { return family() == Family::Content; }
  friend constexpr bool operator==(WordClass, WordClass) = default;
};

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Subkind kind) noexcept;
/// Accepts the lowercase names produced by to_string.
std::optional<Subkind> parse_subkind(std::string_view name) noexcept;

}  // namespace dynamik
