#include <cstdlib>

#include "bmw/rules.hpp"

namespace bmw {

namespace {

using D = Direction;

class ScriptBuilder {
 public:
  explicit ScriptBuilder(int degree) : degree_(degree) {}

  void step(RuleTag tag, int i, int j, int eps, std::size_t pos, D dir) {
    script_.steps.push_back({RuleId{tag, i, j, eps, +1, 0}, pos, dir});
  }
  // Insert g_i^eps g_i^{-eps} at pos.
  void insert_pair(int i, int eps, std::size_t pos) { step(RuleTag::R4, i, 0, eps, pos, D::Backward); }
  // Cancel g_i^eps g_i^{-eps} at pos.
  void cancel_pair(int i, int eps, std::size_t pos) { step(RuleTag::R4, i, 0, eps, pos, D::Forward); }
  void append(const MoveScript& inner, std::size_t offset) {
    for (auto s : inner.steps) {
      s.position += offset;
      script_.steps.push_back(s);
    }
  }
  void derived(const RuleId& r, std::size_t offset) { append(expand_derived_rule(r, degree_), offset); }

  MoveScript take() { return std::move(script_); }

 private:
  int degree_;
  MoveScript script_;
};

}  // namespace

MoveScript expand_derived_rule(const RuleId& r, int degree) {
  if (!is_derived(r.tag)) throw RewriteError(to_string(r.tag) + " is not a derived rule");
  rule_sides(r, degree);  // validates index and sign constraints

  ScriptBuilder b(degree);
  const int i = r.i, j = r.j, e = r.eps;
  switch (r.tag) {
    case RuleTag::D15:
      if (e == 1) {
        b.step(RuleTag::R5, i, j, 1, 0, D::Forward);
      } else {
        // G_i G_j G_i -> G_i G_j G_i (g_j g_i g_j G_j G_i G_j)
        b.insert_pair(j, 1, 3);
        b.insert_pair(i, 1, 4);
        b.insert_pair(j, 1, 5);
        // -> G_i G_j G_i (g_i g_j g_i) G_j G_i G_j
        b.step(RuleTag::R5, i, j, 1, 3, D::Backward);
        // -> G_j G_i G_j
        b.cancel_pair(i, -1, 2);
        b.cancel_pair(j, -1, 1);
        b.cancel_pair(i, -1, 0);
      }
      break;
    case RuleTag::D16:
      // (g_j^-e g_j^e) g_i^e g_j^e g_i^-e
      b.insert_pair(j, -e, 0);
      b.derived(RuleId{RuleTag::D15, j, i, e, 1, 0}, 1);
      b.cancel_pair(i, e, 3);
      break;
    case RuleTag::D17:
      // g_i^e g_j^-e g_i^-e (g_j^-e g_j^e)
      b.insert_pair(j, -e, 3);
      b.derived(RuleId{RuleTag::D15, j, i, -e, 1, 0}, 1);
      b.cancel_pair(i, e, 0);
      break;
    case RuleTag::D18:
      if (e == 1 && r.delta == 1) {
        b.step(RuleTag::R9, i, j, 1, 0, D::Forward);
      } else if (e == -1 && r.delta == -1) {
        // G_i G_j (g_i g_j G_j G_i)
        b.insert_pair(i, 1, 2);
        b.insert_pair(j, 1, 3);
        b.step(RuleTag::R9, i, j, 1, 2, D::Forward);
        b.cancel_pair(j, -1, 1);
        b.cancel_pair(i, -1, 0);
      } else {
        // (g_j^-e g_j^e) g_i^e g_j^-e
        b.insert_pair(j, -e, 0);
        b.derived(RuleId{RuleTag::D18, j, i, e, e, 0}, 1);
        b.cancel_pair(j, e, 2);
      }
      break;
    case RuleTag::D19:
      if (e == 1) {
        b.step(RuleTag::R10, i, j, 1, 0, D::Forward);
      } else {
        // G_i e_j (g_i G_i)
        b.insert_pair(i, 1, 2);
        b.step(RuleTag::R10, i, j, 1, 1, D::Backward);
        b.cancel_pair(i, -1, 0);
      }
      break;
    case RuleTag::D20:
      if (e == 1) {
        b.step(RuleTag::R13, i, 0, 1, 0, D::Forward);
      } else {
        // (G_i g_i) e_i -> G_i (g_i e_i) -> G_i e_i
        b.insert_pair(i, -1, 0);
        b.step(RuleTag::R13, i, 0, 1, 1, D::Backward);
      }
      break;
    case RuleTag::D21:
      if (e == 1) {
        b.step(RuleTag::R14, i, 0, 1, 0, D::Forward);
      } else {
        // e_i (g_i G_i) -> (e_i g_i) G_i -> e_i G_i
        b.insert_pair(i, 1, 1);
        b.step(RuleTag::R14, i, 0, 1, 0, D::Backward);
      }
      break;
    case RuleTag::D22:
      b.step(RuleTag::R6, i, j, e, 0, D::Forward);
      b.step(RuleTag::R7, j, i, r.delta, 0, D::Backward);
      break;
    case RuleTag::D23:
      for (int t = 0; t < std::abs(r.k); ++t)
        b.derived(RuleId{RuleTag::D20, i, 0, r.k > 0 ? 1 : -1, 1, 0}, static_cast<std::size_t>(t));
      break;
    case RuleTag::D24:
      for (int t = 0; t < std::abs(r.k); ++t) b.derived(RuleId{RuleTag::D21, i, 0, r.k > 0 ? 1 : -1, 1, 0}, 0);
      break;
    default:
      throw RewriteError("unknown derived rule");
  }
  return b.take();
}

MoveScript shifted(const MoveScript& script, std::size_t offset) {
  MoveScript out = script;
  for (auto& s : out.steps) s.position += offset;
  return out;
}

std::vector<Word> replay_move_script(const Word& start, const MoveScript& script) {
  std::vector<Word> words{start};
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    const auto& s = script.steps[k];
    try {
      words.push_back(apply_rule(words.back(), s.rule, s.position, s.direction));
    } catch (const RewriteError& err) {
      throw ScriptError(k, err.what());
    }
  }
  return words;
}

Word verify_move_script(const Word& start, const MoveScript& script) {
  return replay_move_script(start, script).back();
}

}  // namespace bmw
