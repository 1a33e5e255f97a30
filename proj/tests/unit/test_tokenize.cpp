#include "doctest.h"
#include "dynamik/tokenize.hpp"
#include "test_support.hpp"

using namespace dynamik;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<Token> stream_all(const std::vector<std::string>& chunks) {
  StreamTokenizer st;
  std::vector<Token> out;
  for (const auto& c : chunks) {
    auto got = st.feed(c);
    out.insert(out.end(), got.begin(), got.end());
  }
  auto tail = st.flush();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

TEST_CASE("tokenize splits a sentence into words and punctuation") {
  const auto tokens = tokenize("Police say the gunman.");
  CHECK(surfaces(tokens) == std::vector<std::string>{"Police", "say", "the", "gunman", "."});
  CHECK(tokens.back().kind == TokenKind::Punctuation);
  CHECK(tokens[0].kind == TokenKind::Word);
}

TEST_CASE("empty and blank input") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \n\t ").empty());
}

TEST_CASE("contractions and hyphenated words stay whole") {
  CHECK(surfaces(tokenize("don't blame them")) == std::vector<std::string>{"don't", "blame", "them"});
  CHECK(surfaces(tokenize("it’s well-known")) == std::vector<std::string>{"it’s", "well-known"});
  CHECK(surfaces(tokenize("'tis -- fine-")) == std::vector<std::string>{"'", "tis", "-", "-", "fine", "-"});
  CHECK(surfaces(tokenize("parents' day")) == std::vector<std::string>{"parents", "'", "day"});
}

TEST_CASE("numbers keep group separators, decimals and fractions") {
  const auto tokens = tokenize("600,000 children, 2.5 m, 1/3 are. 60% of 5th");
  CHECK(surfaces(tokens) == std::vector<std::string>{"600,000", "children", ",", "2.5", "m", ",", "1/3", "are", ".",
                                                     "60", "%", "of", "5th"});
  CHECK(tokens[0].kind == TokenKind::Numeral);
  CHECK(tokens[10].kind == TokenKind::Punctuation);
  CHECK(tokens[12].kind == TokenKind::Numeral);
}

TEST_CASE("non-ASCII letters bind, typographic punctuation separates") {
  CHECK(surfaces(tokenize("naïve café—done…")) == std::vector<std::string>{"naïve", "café", "—", "done", "…"});
  CHECK(surfaces(tokenize("a\xC2\xA0" "b")) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("token kind is punctuation exactly when there is no letter or digit") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    for (const auto& t : tokenize(testing::random_text(rng, 30))) {
      bool alnum = false;
      for (unsigned char c : t.surface) alnum |= std::isalnum(c) || c >= 0x80;
      // Multi-byte punctuation (—, …, ’) is the only non-ASCII punctuation generated.
      const bool known_punct = t.surface == "—" || t.surface == "…" || t.surface == "’" || t.surface == "\xC2\xA0";
      CHECK((t.kind == TokenKind::Punctuation) == (!alnum || known_punct));
    }
  }
}

TEST_CASE("spans are faithful, increasing and cover only non-space gaps") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto text = testing::random_text(rng, 25);
    const auto tokens = tokenize(text);
    std::size_t prev_end = 0;
    std::string rebuilt;
    for (const auto& t : tokens) {
      REQUIRE(t.span.start < t.span.end);
      REQUIRE(t.span.start >= prev_end);
      CHECK(text.substr(t.span.start, t.span.size()) == t.surface);
      rebuilt += text.substr(prev_end, t.span.start - prev_end);
      rebuilt += t.surface;
      prev_end = t.span.end;
    }
    rebuilt += text.substr(prev_end);
    CHECK(rebuilt == text);
    CHECK(tokenize(text) == tokens);  // deterministic
  }
}

TEST_CASE("streaming reassembles words split across chunks") {
  CHECK(surfaces(stream_all({"mush", "room cloud"})) == std::vector<std::string>{"mushroom", "cloud"});

  StreamTokenizer st;
  CHECK(surfaces(st.feed("the ")) == std::vector<std::string>{"the"});
  CHECK(st.feed("gunm").empty());
  CHECK(surfaces(st.feed("an.")) == std::vector<std::string>{"gunman", "."});

  StreamTokenizer pct;
  CHECK(pct.feed("60").empty());
  CHECK(surfaces(pct.feed("%")) == std::vector<std::string>{"60", "%"});
  CHECK(pct.flush().empty());
}

TEST_CASE("streaming holds back a possible joiner until the next character") {
  StreamTokenizer st;
  CHECK(st.feed("600,").empty());
  CHECK(surfaces(st.feed("000 ")) == std::vector<std::string>{"600,000"});
  CHECK(st.feed("don").empty());
  CHECK(st.feed("'").empty());
  CHECK(surfaces(st.feed("t ")) == std::vector<std::string>{"don't"});
  CHECK(surfaces(st.feed("x\xE2\x80")).empty());  // truncated ’
  CHECK(surfaces(st.feed("\x99s ")) == std::vector<std::string>{"x’s"});
}

TEST_CASE("60 then % then flush yields numeral and punctuation") {
  StreamTokenizer st;
  std::vector<Token> all;
  for (const auto* chunk : {"60", "%"}) {
    auto got = st.feed(chunk);
    all.insert(all.end(), got.begin(), got.end());
  }
  auto tail = st.flush();
  all.insert(all.end(), tail.begin(), tail.end());
  CHECK(surfaces(all) == std::vector<std::string>{"60", "%"});
  CHECK(all[0].kind == TokenKind::Numeral);
}

TEST_CASE("streaming equals batch tokenization for every split") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 500; ++round) {
    const auto text = testing::random_text(rng, 20);
    std::vector<std::string> chunks;
    std::size_t pos = 0;
    while (pos < text.size()) {
      // Byte-level cuts, including inside multi-byte sequences.
      const auto len = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
      chunks.push_back(text.substr(pos, len));
      pos += len;
    }
    CHECK(stream_all(chunks) == tokenize(text));
  }
}

TEST_CASE("streaming equals batch on every two-way split of a news transcript") {
  const auto text = testing::news(2);
  const auto expected = tokenize(text);
  for (std::size_t cut = 0; cut <= text.size(); ++cut)
    REQUIRE(stream_all({text.substr(0, cut), text.substr(cut)}) == expected);
}
