#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dynamik/error.hpp"
#include "dynamik/lexicon.hpp"
#include "test_support.hpp"

using namespace dynamik;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    Lexicon::parse(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return 0;
}

}  // namespace

TEST_CASE("builtin lexicon covers closed classes only") {
  const auto& lex = Lexicon::builtin();
  CHECK(lex.lookup("the") == Subkind::Determiner);
  CHECK(lex.lookup("THE") == Subkind::Determiner);
  CHECK(lex.lookup("of") == Subkind::Preposition);
  CHECK(lex.lookup("could") == Subkind::Auxiliary);
  CHECK(lex.lookup("themselves") == Subkind::Pronoun);
  CHECK(lex.lookup("although") == Subkind::Conjunction);
  CHECK_FALSE(lex.lookup("elephants"));
  CHECK_FALSE(lex.lookup("not"));
  CHECK(lex.is_listed_negative("Never"));

  for (const auto& [surface, kind] : lex.entries()) {
    CHECK(family_of(kind) == Family::Function);
    CHECK(lex.negatives().count(surface) == 0);
  }
}

TEST_CASE("builtin lexicon is the shipped data file") {
  const auto from_file = Lexicon::from_file(testing::data_path("lexicon/english.tsv"));
  CHECK(from_file.entries() == Lexicon::builtin().entries());
  CHECK(from_file.negatives() == Lexicon::builtin().negatives());
}

TEST_CASE("parse accepts comments, blank lines and a negatives section") {
  const auto lex = Lexicon::parse("# demo\n\nthe\tdeterminer\nOf\tpreposition\r\n[negatives]\nnot\nn't\n");
  CHECK(lex.size() == 2);
  CHECK(lex.lookup("of") == Subkind::Preposition);
  CHECK(lex.is_listed_negative("NOT"));
  CHECK(lex.negatives().count("n't") == 1);
}

TEST_CASE("parse errors name the offending line") {
  CHECK(error_line("the\tdeterminer\na\tdeterminer\nthe\tpronoun\n") == 3);
  CHECK(error_line("# c\nthe determiner\n") == 2);
  CHECK(error_line("the\tnoun\n") == 1);
  CHECK(error_line("the\tbogus\n") == 1);
  CHECK(error_line("\n[adverbs]\n") == 2);
  CHECK(error_line("not\tparticle\n[negatives]\nnot\n") == 3);
  CHECK(error_line("[negatives]\nnot\nnot\n") == 3);
  CHECK(error_line("[negatives]\nnot\tnegative\n") == 2);
  CHECK(error_line("[negatives]\nnever\n[negatives]\n") == 3);
  CHECK(error_line("\tdeterminer\n") == 1);
}

TEST_CASE("load_lexicon prefers an explicit path, then the environment") {
  const auto dir = std::filesystem::temp_directory_path() / "dynamik_lexicon_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tiny.tsv";
  std::ofstream(path) << "zorp\tparticle\n";

  CHECK(load_lexicon(path).lookup("zorp") == Subkind::Particle);

  ::setenv("DYNAMIK_LEXICON", path.c_str(), 1);
  CHECK(load_lexicon().lookup("zorp") == Subkind::Particle);
  ::unsetenv("DYNAMIK_LEXICON");
  CHECK_FALSE(load_lexicon().lookup("zorp"));

  CHECK_THROWS_AS(load_lexicon(dir / "missing.tsv"), Error);
}
