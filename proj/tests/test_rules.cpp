#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bmw/rules.hpp"

using namespace bmw;

namespace {

const std::vector<RuleTag> kBase = {RuleTag::R1, RuleTag::R2,  RuleTag::R3,  RuleTag::R4,  RuleTag::R5,
                                    RuleTag::R6, RuleTag::R7,  RuleTag::R8,  RuleTag::R9,  RuleTag::R10,
                                    RuleTag::R11, RuleTag::R12, RuleTag::R13, RuleTag::R14};
const std::vector<RuleTag> kDerived = {RuleTag::D15, RuleTag::D16, RuleTag::D17, RuleTag::D18, RuleTag::D19,
                                       RuleTag::D20, RuleTag::D21, RuleTag::D22, RuleTag::D23, RuleTag::D24};

std::vector<std::string> tags(const MoveScript& s) {
  std::vector<std::string> out;
  for (const auto& st : s.steps) out.push_back(to_string(st.rule.tag));
  return out;
}

}  // namespace

TEST_CASE("tags and categories") {
  for (auto t : kBase) CHECK(parse_rule_tag(to_string(t)) == t);
  for (auto t : kDerived) CHECK(is_derived(t));
  CHECK_FALSE(parse_rule_tag("R15"));
  CHECK(category(RuleTag::R2) == RuleCategory::Band);
  CHECK(category(RuleTag::R12) == RuleCategory::Disk);
  CHECK(category(RuleTag::R9) == RuleCategory::IsotopyRegular);
  CHECK(category(RuleTag::R14) == RuleCategory::IsotopyRI);
  CHECK(category(RuleTag::D24) == RuleCategory::IsotopyRI);
  CHECK(category(RuleTag::D22) == RuleCategory::IsotopyRegular);
}

TEST_CASE("apply examples") {
  const Word w = parse_word("g1 g2 g1", 3);
  CHECK(word_to_text(apply_rule(w, {RuleTag::R5, 1, 2}, 0, Direction::Forward)) == "g2 g1 g2");
  CHECK(word_to_text(apply_rule(parse_word("e1 e1", 2), {RuleTag::R12, 1}, 0, Direction::Forward)) == "e1");
  CHECK(word_to_text(apply_rule(Word(2), {RuleTag::R1, 1, 0, -1}, 0, Direction::Forward)) == "G1");
  CHECK(word_to_text(apply_rule(parse_word("e1 g3", 4), {RuleTag::R10, 3, 1}, 0, Direction::Backward)) == "g3 e1");
  CHECK(word_to_text(apply_rule(parse_word("e1", 2), {RuleTag::R14, 1}, 0, Direction::Forward)) == "e1 g1");
}

TEST_CASE("rule constraints") {
  CHECK_THROWS_AS(rule_sides({RuleTag::R5, 1, 3}, 4), RewriteError);
  CHECK_THROWS_AS(rule_sides({RuleTag::R9, 1, 2}, 4), RewriteError);
  CHECK_THROWS_AS(rule_sides({RuleTag::R1, 3}, 3), RewriteError);
  CHECK_THROWS_AS(rule_sides({RuleTag::R1, 1, 0, 2}, 3), RewriteError);
  CHECK_THROWS_AS(apply_rule(parse_word("g1 g2", 3), {RuleTag::R5, 1, 2}, 0, Direction::Forward), RewriteError);
  CHECK_THROWS_AS(apply_rule(parse_word("g1", 3), {RuleTag::R4, 1}, 2, Direction::Backward), RewriteError);
}

TEST_CASE("every instance reverses in every context") {
  for (int n = 2; n <= 5; ++n)
    for (auto t : kBase)
      for (const auto& r : rule_instances(t, n)) {
        const auto s = rule_sides(r, n);
        std::vector<Letter> ctx{Letter::e(1)};
        ctx.insert(ctx.end(), s.left.begin(), s.left.end());
        ctx.push_back(Letter::g(n - 1, -1));
        const Word w(n, ctx);
        const Word fwd = apply_rule(w, r, 1, Direction::Forward);
        CHECK(apply_rule(fwd, r, 1, Direction::Backward) == w);
      }
}

TEST_CASE("enumeration") {
  const Word w = parse_word("e1 e2 e1", 3);
  const auto apps = enumerate_rule_applications(w, {RuleCategory::IsotopyRegular});
  CHECK(std::find(apps.begin(), apps.end(), RuleApplication{{RuleTag::R8, 1, 2}, 0, Direction::Forward}) !=
        apps.end());
  for (const auto& a : apps) CHECK_NOTHROW(apply_rule(w, a.rule, a.position, a.direction));

  const auto all = enumerate_rule_applications(w, {RuleCategory::Band}, {true});
  const auto strict = enumerate_rule_applications(w, {RuleCategory::Band}, {false});
  CHECK(strict.size() < all.size());
  for (const auto& a : strict) {
    const auto sides = rule_sides(a.rule, 3);
    CHECK_FALSE((a.direction == Direction::Forward ? sides.left : sides.right).empty());
  }
  CHECK(std::is_sorted(all.begin(), all.end(), [](auto& a, auto& b) { return a.position < b.position; }));
}

TEST_CASE("derived scripts verify for every parameter choice") {
  for (int n = 2; n <= 5; ++n)
    for (auto t : kDerived)
      for (const auto& r : rule_instances(t, n)) {
        const auto s = rule_sides(r, n);
        const auto script = expand_derived_rule(r, n);
        CHECK_MESSAGE(verify_move_script(Word(n, s.left), script) == Word(n, s.right), to_string(r));
      }
}

TEST_CASE("displayed derivations") {
  // the braid relation for negative crossings passes through the inserted
  // g_j g_i g_j g_j^-1 g_i^-1 g_j^-1
  const RuleId d15{RuleTag::D15, 1, 2, -1};
  const auto script = expand_derived_rule(d15, 3);
  const auto words = replay_move_script(parse_word("G1 G2 G1", 3), script);
  CHECK(word_to_text(words.back()) == "G2 G1 G2");
  CHECK(std::count_if(words.begin(), words.end(),
                      [](const Word& w) { return word_to_text(w) == "G1 G2 G1 g2 g1 g2 G2 G1 G2"; }) == 1);
  CHECK(tags(script) == std::vector<std::string>{"R4", "R4", "R4", "R5", "R4", "R4", "R4"});

  const auto d18 = expand_derived_rule({RuleTag::D18, 1, 3, -1, -1}, 5);
  const auto t18 = tags(d18);
  CHECK(std::count(t18.begin(), t18.end(), "R9") == 1);
  CHECK(std::count(t18.begin(), t18.end(), "R4") == static_cast<long>(t18.size()) - 1);
  CHECK(verify_move_script(parse_word("G1 G3", 5), d18) == parse_word("G3 G1", 5));

  const auto d20 = expand_derived_rule({RuleTag::D20, 1, 0, -1}, 2);
  CHECK(tags(d20) == std::vector<std::string>{"R4", "R13"});
  CHECK(verify_move_script(parse_word("e1", 2), d20) == parse_word("G1 e1", 2));

  CHECK(verify_move_script(parse_word("e1", 2), expand_derived_rule({RuleTag::D21, 1, 0, 1}, 2)) ==
        parse_word("e1 g1", 2));
  CHECK(expand_derived_rule({RuleTag::D23, 1, 0, 1, 1, 0}, 2).steps.empty());
  CHECK(tags(expand_derived_rule({RuleTag::D22, 1, 2, 1, -1}, 3)) == std::vector<std::string>{"R6", "R7"});
}

TEST_CASE("script errors name the step") {
  MoveScript s{{{{RuleTag::R4, 1, 0, 1}, 0, Direction::Backward}, {{RuleTag::R12, 1}, 0, Direction::Forward}}};
  try {
    verify_move_script(Word(2), s);
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 1);
  }
  CHECK(verify_move_script(Word(3), {}) == Word(3));
  CHECK(verify_move_script(Word(2), shifted({{{{RuleTag::R2, 1}, 0, Direction::Forward}}}, 0)) == parse_word("e1", 2));
}
