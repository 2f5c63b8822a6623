#include "bmw/rules.hpp"

#include <array>
#include <cstdlib>

namespace bmw {

namespace {

constexpr std::array<std::string_view, 24> kTagNames = {
    "R1",  "R2",  "R3",  "R4",  "R5",  "R6",  "R7",  "R8",  "R9",  "R10", "R11", "R12",
    "R13", "R14", "D15", "D16", "D17", "D18", "D19", "D20", "D21", "D22", "D23", "D24"};

enum class IndexRelation { None, Adjacent, Distant };

IndexRelation relation(RuleTag tag) {
  switch (tag) {
    case RuleTag::R5: case RuleTag::R6: case RuleTag::R7: case RuleTag::R8:
    case RuleTag::D15: case RuleTag::D16: case RuleTag::D17: case RuleTag::D22:
      return IndexRelation::Adjacent;
    case RuleTag::R9: case RuleTag::R10: case RuleTag::R11: case RuleTag::D18: case RuleTag::D19:
      return IndexRelation::Distant;
    default:
      return IndexRelation::None;
  }
}

bool uses_eps(RuleTag tag) {
  switch (tag) {
    case RuleTag::R1: case RuleTag::R3: case RuleTag::R4: case RuleTag::R6: case RuleTag::R7:
    case RuleTag::D15: case RuleTag::D16: case RuleTag::D17: case RuleTag::D18: case RuleTag::D19:
    case RuleTag::D20: case RuleTag::D21: case RuleTag::D22:
      return true;
    default:
      return false;
  }
}

bool uses_delta(RuleTag tag) { return tag == RuleTag::D18 || tag == RuleTag::D22; }

void check_index(int v, int degree, const char* name) {
  if (v < 1 || v > degree - 1)
    throw RewriteError(std::string("index ") + name + "=" + std::to_string(v) + " out of range for degree " +
                       std::to_string(degree));
}

void check_sign(int s, const char* name) {
  if (s != 1 && s != -1) throw RewriteError(std::string("sign ") + name + " must be +1 or -1");
}

// Adjacent transposition of two letters; R9-R11, D18 and D19 all reduce to it.
RuleSides exchange(Letter a, Letter b) { return {{a, b}, {b, a}}; }

std::vector<Letter> power(int i, int k) {
  std::vector<Letter> out(static_cast<std::size_t>(std::abs(k)), Letter::g(i, k >= 0 ? 1 : -1));
  return out;
}

}  // namespace

std::string to_string(RuleTag tag) { return std::string(kTagNames[static_cast<std::size_t>(tag)]); }

std::optional<RuleTag> parse_rule_tag(std::string_view text) {
  for (std::size_t k = 0; k < kTagNames.size(); ++k)
    if (kTagNames[k] == text) return static_cast<RuleTag>(k);
  return std::nullopt;
}

bool is_derived(RuleTag tag) { return static_cast<int>(tag) >= static_cast<int>(RuleTag::D15); }

RuleCategory category(RuleTag tag) {
  switch (tag) {
    case RuleTag::R1: case RuleTag::R2: case RuleTag::R3:
      return RuleCategory::Band;
    case RuleTag::R12:
      return RuleCategory::Disk;
    case RuleTag::R13: case RuleTag::R14:
    case RuleTag::D20: case RuleTag::D21: case RuleTag::D23: case RuleTag::D24:
      return RuleCategory::IsotopyRI;
    default:
      return RuleCategory::IsotopyRegular;
  }
}

std::string to_string(RuleCategory c) {
  switch (c) {
    case RuleCategory::Band: return "band";
    case RuleCategory::Disk: return "disk";
    case RuleCategory::IsotopyRegular: return "isotopy-regular";
    case RuleCategory::IsotopyRI: return "isotopy-RI";
  }
  return "?";
}

std::string to_string(const RuleId& r) {
  std::string out = to_string(r.tag) + "(i=" + std::to_string(r.i);
  if (relation(r.tag) != IndexRelation::None) out += ",j=" + std::to_string(r.j);
  if (uses_eps(r.tag)) out += ",eps=" + std::to_string(r.eps);
  if (uses_delta(r.tag)) out += ",delta=" + std::to_string(r.delta);
  if (r.tag == RuleTag::D23 || r.tag == RuleTag::D24) out += ",k=" + std::to_string(r.k);
  return out + ")";
}

RuleSides rule_sides(const RuleId& r, int n) {
  check_index(r.i, n, "i");
  switch (relation(r.tag)) {
    case IndexRelation::Adjacent:
      check_index(r.j, n, "j");
      if (std::abs(r.i - r.j) != 1) throw RewriteError(to_string(r) + " requires |i-j|=1");
      break;
    case IndexRelation::Distant:
      check_index(r.j, n, "j");
      if (std::abs(r.i - r.j) <= 1) throw RewriteError(to_string(r) + " requires |i-j|>1");
      break;
    case IndexRelation::None:
      break;
  }
  if (uses_eps(r.tag)) check_sign(r.eps, "eps");
  if (uses_delta(r.tag)) check_sign(r.delta, "delta");

  const int i = r.i, j = r.j, e = r.eps, d = r.delta;
  auto g = [](int idx, int s) { return Letter::g(idx, s); };
  auto h = [](int idx) { return Letter::e(idx); };
  switch (r.tag) {
    case RuleTag::R1: return {{}, {g(i, e)}};
    case RuleTag::R2: return {{}, {h(i)}};
    case RuleTag::R3: return {{g(i, e)}, {h(i)}};
    case RuleTag::R4: return {{g(i, e), g(i, -e)}, {}};
    case RuleTag::R5: return {{g(i, 1), g(j, 1), g(i, 1)}, {g(j, 1), g(i, 1), g(j, 1)}};
    case RuleTag::R6: return {{g(i, e), g(j, e), h(i)}, {h(j), h(i)}};
    case RuleTag::R7: return {{h(i), g(j, e), g(i, e)}, {h(i), h(j)}};
    case RuleTag::R8: return {{h(i), h(j), h(i)}, {h(i)}};
    case RuleTag::R9: return exchange(g(i, 1), g(j, 1));
    case RuleTag::R10: return exchange(g(i, 1), h(j));
    case RuleTag::R11: return exchange(h(i), h(j));
    case RuleTag::R12: return {{h(i), h(i)}, {h(i)}};
    case RuleTag::R13: return {{h(i)}, {g(i, 1), h(i)}};
    case RuleTag::R14: return {{h(i)}, {h(i), g(i, 1)}};
    case RuleTag::D15: return {{g(i, e), g(j, e), g(i, e)}, {g(j, e), g(i, e), g(j, e)}};
    case RuleTag::D16: return {{g(i, e), g(j, e), g(i, -e)}, {g(j, -e), g(i, e), g(j, e)}};
    case RuleTag::D17: return {{g(i, e), g(j, -e), g(i, -e)}, {g(j, -e), g(i, -e), g(j, e)}};
    case RuleTag::D18: return exchange(g(i, e), g(j, d));
    case RuleTag::D19: return exchange(g(i, e), h(j));
    case RuleTag::D20: return {{h(i)}, {g(i, e), h(i)}};
    case RuleTag::D21: return {{h(i)}, {h(i), g(i, e)}};
    case RuleTag::D22: return {{g(i, e), g(j, e), h(i)}, {h(j), g(i, d), g(j, d)}};
    case RuleTag::D23: {
      auto right = power(i, r.k);
      right.push_back(h(i));
      return {{h(i)}, right};
    }
    case RuleTag::D24: {
      std::vector<Letter> right{h(i)};
      auto tail = power(i, r.k);
      right.insert(right.end(), tail.begin(), tail.end());
      return {{h(i)}, right};
    }
  }
  throw RewriteError("unknown rule tag");
}

Word apply_rule(const Word& w, const RuleId& rule, std::size_t position, Direction dir) {
  auto sides = rule_sides(rule, w.degree());
  const auto& source = dir == Direction::Forward ? sides.left : sides.right;
  const auto& target = dir == Direction::Forward ? sides.right : sides.left;
  if (position > w.size())
    throw RewriteError("position " + std::to_string(position) + " out of range for word of length " +
                       std::to_string(w.size()));
  if (!w.has_factor(position, source))
    throw RewriteError(to_string(rule) + (dir == Direction::Forward ? " ->" : " <-") + ": pattern '" +
                       letters_to_text(source) + "' not found at position " + std::to_string(position) +
                       " of '" + word_to_text(w) + "'");
  return w.splice(position, source.size(), target);
}

std::vector<RuleId> rule_instances(RuleTag tag, int n) {
  std::vector<RuleId> out;
  const std::vector<int> signs{+1, -1};
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> js{0};
    if (relation(tag) != IndexRelation::None) {
      js.clear();
      for (int j = 1; j <= n - 1; ++j) {
        int gap = std::abs(i - j);
        if ((relation(tag) == IndexRelation::Adjacent && gap == 1) ||
            (relation(tag) == IndexRelation::Distant && gap > 1))
          js.push_back(j);
      }
    }
    std::vector<int> ks{0};
    if (tag == RuleTag::D23 || tag == RuleTag::D24) ks = {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
    for (int j : js)
      for (int e : uses_eps(tag) ? signs : std::vector<int>{+1})
        for (int d : uses_delta(tag) ? signs : std::vector<int>{+1})
          for (int k : ks) out.push_back(RuleId{tag, i, j, e, d, k});
  }
  return out;
}

std::vector<RuleApplication> enumerate_rule_applications(const Word& w, const std::set<RuleCategory>& categories,
                                                         EnumerateOptions options) {
  struct Candidate {
    RuleId rule;
    RuleSides sides;
  };
  std::vector<Candidate> candidates;
  for (int t = static_cast<int>(RuleTag::R1); t <= static_cast<int>(RuleTag::R14); ++t) {
    auto tag = static_cast<RuleTag>(t);
    if (!categories.contains(category(tag))) continue;
    for (const auto& r : rule_instances(tag, w.degree())) candidates.push_back({r, rule_sides(r, w.degree())});
  }

  std::vector<RuleApplication> out;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (const auto& c : candidates) {
      for (auto dir : {Direction::Forward, Direction::Backward}) {
        const auto& source = dir == Direction::Forward ? c.sides.left : c.sides.right;
        if (source.empty() && !options.include_pure_insertions) continue;
        if (w.has_factor(pos, source)) out.push_back({c.rule, pos, dir});
      }
    }
  }
  return out;
}

}  // namespace bmw
