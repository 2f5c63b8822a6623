#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bmw/word.hpp"

using namespace bmw;

TEST_CASE("parse and print round trip") {
  for (const char* text : {"1", "g1", "G2 e1 g3", "e1 e1 e1"}) CHECK(word_to_text(parse_word(text, 4)) == text);
  CHECK(word_to_text(parse_word("  g1\tG1  ", 2)) == "g1 G1");
  CHECK(parse_word("1", 3).empty());
}

TEST_CASE("malformed words are rejected") {
  for (const char* text : {"", "  ", "x1", "g", "g0", "g01", "g+1", "g1x", "1 g1", "g1 1", "f2"})
    CHECK_THROWS_AS(parse_word(text, 3), ParseError);
  CHECK_THROWS_AS(parse_word("g3", 3), ParseError);
  CHECK_THROWS_AS(parse_word("e1", 1), ParseError);
  CHECK_THROWS_AS(parse_word("1", 0), ParseError);
  CHECK_NOTHROW(parse_word("1", 1));
}

TEST_CASE("letters") {
  CHECK(Letter::g(2).inverse() == Letter::g(2, -1));
  CHECK(Letter::g(2, -1).inverse() == Letter::g(2));
  CHECK(Letter::e(1).inverse() == Letter::e(1));
  CHECK(Letter::g(1, -1).sign() == -1);
  CHECK(Letter::e(1).sign() == 0);
  CHECK(to_string(Letter::g(3, -1)) == "G3");
}

TEST_CASE("splice and factors") {
  const Word w = parse_word("g1 g2 g1", 3);
  const std::vector<Letter> e{Letter::e(1)};
  CHECK(word_to_text(w.splice(1, 1, e)) == "g1 e1 g1");
  CHECK(word_to_text(w.splice(3, 0, e)) == "g1 g2 g1 e1");
  CHECK(word_to_text(w.splice(0, 3, {})) == "1");
  CHECK_THROWS_AS(w.splice(2, 2, e), RewriteError);
  CHECK(w.has_factor(1, std::vector<Letter>{Letter::g(2), Letter::g(1)}));
  CHECK_FALSE(w.has_factor(2, std::vector<Letter>{Letter::g(1), Letter::g(1)}));
  CHECK(w.has_factor(3, {}));
  CHECK_THROWS_AS(Word(2, {Letter::g(2)}), RewriteError);
}

TEST_CASE("concat") {
  CHECK(word_to_text(concat(parse_word("g1", 3), parse_word("e2", 3))) == "g1 e2");
  CHECK(concat(Word(3), Word(3)) == Word(3));
  CHECK_THROWS_AS(concat(Word(2), Word(3)), RewriteError);
}
