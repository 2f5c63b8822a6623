#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bmw/word.hpp"

namespace bmw {

// Base moves of a normal-form surface (R1..R14) and the moves derived from
// them (D15..D24).
enum class RuleTag {
  R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14,
  D15, D16, D17, D18, D19, D20, D21, D22, D23, D24
};

enum class RuleCategory { Band, Disk, IsotopyRegular, IsotopyRI };

enum class Direction { Forward, Backward };

struct RuleId {
  RuleTag tag = RuleTag::R1;
  int i = 1;
  int j = 0;
  int eps = +1;
  int delta = +1;
  int k = 0;  // power, D23/D24 only

  friend bool operator==(const RuleId&, const RuleId&) = default;
};

std::string to_string(RuleTag tag);
std::optional<RuleTag> parse_rule_tag(std::string_view text);
RuleCategory category(RuleTag tag);
std::string to_string(RuleCategory c);
bool is_derived(RuleTag tag);
std::string to_string(const RuleId& r);

// Both sides of a rule, written left-to-right as the rule is stated.
// Throws RewriteError when an index or sign constraint is violated.
struct RuleSides {
  std::vector<Letter> left;
  std::vector<Letter> right;
};
RuleSides rule_sides(const RuleId& rule, int degree);

// Replaces the source side found at `position` by the target side.
Word apply_rule(const Word& w, const RuleId& rule, std::size_t position, Direction dir);

struct RuleApplication {
  RuleId rule;
  std::size_t position = 0;
  Direction direction = Direction::Forward;
  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct EnumerateOptions {
  // Whether to report moves whose source side is the empty word
  // (R1/R2/R4 insertions), which apply at every offset.
  bool include_pure_insertions = true;
};

// Every base-rule (R1..R14) application to `w` in the given categories.
// Ordered by position, then rule tag, then parameters, forward before backward.
std::vector<RuleApplication> enumerate_rule_applications(const Word& w, const std::set<RuleCategory>& categories,
                                                         EnumerateOptions options = {});

// Every concrete parameter choice of `tag` that is admissible in degree n.
std::vector<RuleId> rule_instances(RuleTag tag, int degree);

struct ScriptStep {
  RuleId rule;
  std::size_t position = 0;
  Direction direction = Direction::Forward;
  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

struct MoveScript {
  std::vector<ScriptStep> steps;
  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

// Script over base rules realizing `rule` left-to-right, starting from the
// rule's left side placed at offset 0.
MoveScript expand_derived_rule(const RuleId& rule, int degree);
MoveScript shifted(const MoveScript& script, std::size_t offset);

class ScriptError : public RewriteError {
 public:
  ScriptError(std::size_t step, const std::string& what)
      : RewriteError("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Replays every step; throws ScriptError naming the first illegal step.
Word verify_move_script(const Word& start, const MoveScript& script);
std::vector<Word> replay_move_script(const Word& start, const MoveScript& script);

}  // namespace bmw
