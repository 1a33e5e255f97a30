#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "dynamik/word_class.hpp"

namespace dynamik {

/// Closed-class word list plus the negation forms that override it.
///
/// Text format, UTF-8, one entry per line:
///
///     # comment
///     the<TAB>determiner
///     [negatives]
///     not
///
/// Lookups are case-insensitive (ASCII folding plus U+2019 -> ').
class Lexicon {
 public:
  Lexicon() = default;

  /// Throws ParseError naming the 1-based line of the first problem.
  static Lexicon parse(std::string_view text);
  static Lexicon from_file(const std::filesystem::path& path);
  /// The English list compiled into the library.
  static const Lexicon& builtin();

  std::optional<Subkind> lookup(std::string_view surface) const;
  bool is_listed_negative(std::string_view surface) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::unordered_map<std::string, Subkind>& entries() const noexcept { return entries_; }
  const std::unordered_set<std::string>& negatives() const noexcept { return negatives_; }

 private:
  std::unordered_map<std::string, Subkind> entries_;
  std::unordered_set<std::string> negatives_;
};

/// `path` if given, else $DYNAMIK_LEXICON if set, else the builtin list.
Lexicon load_lexicon(const std::optional<std::filesystem::path>& path = std::nullopt);

/// Lowercases ASCII and maps the typographic apostrophe to '.
std::string fold_case(std::string_view surface);

}  // namespace dynamik
