#include <fstream>

#include "doctest.h"

#include "cnl/errors.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/tokens.hpp"
#include "test_util.hpp"

using namespace cnl;

TEST_CASE("tokenize splits sentences on terminators") {
  auto sentences = tokenize("SimpleMat is simple. Is it simple?");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].size() == 4);
  CHECK(sentences[0][0].text == "SimpleMat");
  CHECK(sentences[0][0].lower == "simplemat");
  CHECK(sentences[0].back().text == ".");
  CHECK(sentences[0].back().kind == TokenKind::kPunct);
  CHECK(sentences[1].back().text == "?");
  CHECK(sentences[1][0].sentence == 1);
  CHECK(sentences[1][0].index == 0);
}

TEST_CASE("tokenize keeps hyphenated words and numbers") {
  auto sentences = tokenize("The trap-door-algorithm calculates 42.");
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0][1].text == "trap-door-algorithm");
  CHECK(sentences[0][3].kind == TokenKind::kNumber);
  CHECK(sentences[0][3].text == "42");
}

TEST_CASE("tokenize raises on empty input") {
  CHECK_THROWS_AS(tokenize(""), EmptyInputError);
  CHECK_THROWS_AS(tokenize("   \t "), EmptyInputError);
}

TEST_CASE("render_sentence restores spacing with attached terminator") {
  auto sentences = tokenize("It  has a   card .");
  CHECK(render_sentence(sentences[0]) == "It has a card.");
}

TEST_CASE("lexicon entry parsing and lookup") {
  Lexicon lex = testing::atm_lexicon();
  auto entries = lex.lookup("customer");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0]->category == Category::kNoun);
  CHECK(entries[0]->pred == "customer");
  CHECK(entries[0]->gender == std::vector<Gender>{Gender::kMasc, Gender::kFem});

  SUBCASE("multi-word surfaces match greedily") {
    CHECK(lex.lookup("money dispenser").size() == 1);
    auto matches = lex.lookup_at({"money", "dispenser", "x"}, 0);
    REQUIRE(!matches.empty());
    CHECK(matches[0].consumed == 2);
  }
  SUBCASE("closed-class words are built in") {
    for (const char* w : {"a", "an", "the", "every", "if", "then", "it", "who"})
      CHECK_MESSAGE(!lex.lookup(w).empty(), w);
  }
  SUBCASE("verbs carry their kind") {
    CHECK(*lex.lookup("enter")[0]->verb_kind == VerbKind::kEvent);
    CHECK(*lex.lookup("have")[0]->verb_kind == VerbKind::kState);
  }
}

TEST_CASE("lexicon format errors carry the line number") {
  Lexicon lex;
  CHECK_THROWS_AS(lex.load_lines({"noun|card"}), LexiconFormatError);
  CHECK_THROWS_AS(lex.load_lines({"gadget|x|x|x"}), LexiconFormatError);
  try {
    lex.load_lines({"# fine", "noun|bad"});
  } catch (const LexiconFormatError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("add_entry extends without replacing") {
  Lexicon lex = testing::atm_lexicon();
  size_t before = lex.open_entries().size();
  lex.add_entry(Lexicon::parse_entry_line("noun|wallet|wallet|wallet", 0));
  CHECK(lex.open_entries().size() == before + 1);
  CHECK(!lex.lookup("wallet").empty());
  CHECK(!lex.lookup("customer").empty());
}

TEST_CASE("lexicon save and load round trip") {
  Lexicon lex = testing::atm_lexicon();
  lex.save("/tmp/cnl_lex_roundtrip.lex");
  Lexicon back;
  back.load("/tmp/cnl_lex_roundtrip.lex");
  CHECK(back.open_entries().size() == lex.open_entries().size());
  CHECK(!back.lookup("money dispenser").empty());
  CHECK(back.lookup("customer")[0]->gender == lex.lookup("customer")[0]->gender);
}

TEST_CASE("inflection: third person and plurals resolve to the lemma") {
  Lexicon lex = testing::atm_lexicon();
  auto enters = lex.lookup_at({"enters"}, 0);
  REQUIRE(!enters.empty());
  CHECK(enters[0].inflected_s);
  CHECK(enters[0].entry->lemma == "enter");
  auto cards = lex.lookup_at({"cards"}, 0);
  REQUIRE(!cards.empty());
  CHECK(cards[0].inflected_s);
  CHECK(progressive_base(lex, "checking") != nullptr);
  CHECK(progressive_base(lex, "entering") != nullptr);
  CHECK(progressive_base(lex, "having") == nullptr);  // state verb
  CHECK(progressive_base(lex, "nothing") == nullptr);
}
