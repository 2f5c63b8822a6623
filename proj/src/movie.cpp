#include "bmw/movie.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace bmw {

namespace {

constexpr std::array<std::string_view, 17> kKindNames = {
    "BlackG", "XDot",    "Saddle",  "GCap",    "GCup",   "ECap",  "ECup",       "White", "Crossing",
    "Square8", "Square5", "XTri",   "Branch",  "Square6", "XStar", "SquareStar", "Level"};

std::string clause_of(const Event& e) {
  switch (e.kind) {
    case EventKind::BlackG: return "(a) black vertex";
    case EventKind::Crossing:
      return (e.a.is_hook() || e.b.is_hook()) ? "(f) crossing" : "(b) crossing";
    case EventKind::White: return "(c) white vertex";
    case EventKind::XDot: return "(d) x-mark of degree 1";
    case EventKind::Saddle: return "(e) x-mark of degree 2";
    case EventKind::Square8: return "(g) square of degree 4";
    case EventKind::Square5: return "(h) square of degree 5";
    case EventKind::XTri: return "(i) x-mark of degree 3";
    case EventKind::Branch: return "(j) square of degree 3";
    case EventKind::Square6: return "(k) square of degree 6";
    case EventKind::XStar: return "(i') x-mark of degree m";
    case EventKind::SquareStar: return "(j') square of degree m";
    case EventKind::GCap: return "g-edge minimum";
    case EventKind::GCup: return "g-edge maximum";
    case EventKind::ECap: return "e-edge minimum";
    case EventKind::ECup: return "e-edge maximum";
    case EventKind::Level: return "trivial level";
  }
  return "?";
}

void require_index(const Event& e, int v, int degree, const char* name) {
  if (v < 1 || v > degree - 1)
    throw RewriteError(clause_of(e) + ": index " + name + "=" + std::to_string(v) + " out of range for degree " +
                       std::to_string(degree));
}

void require_sign(const Event& e, int s, const char* name) {
  if (s != 1 && s != -1) throw RewriteError(clause_of(e) + ": sign " + name + " must be +1 or -1");
}

EventRewrite oriented(std::vector<Letter> left, std::vector<Letter> right, bool forward) {
  if (forward) return {std::move(left), std::move(right)};
  return {std::move(right), std::move(left)};
}

EventRewrite from_rule(const Event& e, const RuleId& r, int degree, bool forward) {
  try {
    auto s = rule_sides(r, degree);
    return oriented(std::move(s.left), std::move(s.right), forward);
  } catch (const RewriteError& err) {
    throw RewriteError(clause_of(e) + ": " + err.what());
  }
}

}  // namespace

std::string to_string(EventKind kind) { return std::string(kKindNames[static_cast<std::size_t>(kind)]); }

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k)
    if (kKindNames[k] == text) return static_cast<EventKind>(k);
  return std::nullopt;
}

std::string vertex_type_of(EventKind kind, bool crossing_has_hook) {
  switch (kind) {
    case EventKind::BlackG: return "a";
    case EventKind::Crossing: return crossing_has_hook ? "f" : "b";
    case EventKind::White: return "c";
    case EventKind::XDot: return "d";
    case EventKind::Saddle: return "e";
    case EventKind::Square8: return "g";
    case EventKind::Square5: return "h";
    case EventKind::XTri: return "i";
    case EventKind::Branch: return "j";
    case EventKind::Square6: return "k";
    case EventKind::XStar: return "i'";
    case EventKind::SquareStar: return "j'";
    default: return "";
  }
}

Event Event::black(std::size_t pos, int i, int eps, bool create) {
  Event e;
  e.kind = EventKind::BlackG, e.position = pos, e.i = i, e.eps = eps, e.forward = create;
  return e;
}
Event Event::xdot(std::size_t pos, int i, bool create) {
  Event e;
  e.kind = EventKind::XDot, e.position = pos, e.i = i, e.forward = create;
  return e;
}
Event Event::saddle(std::size_t pos, int i, int eps, bool g_to_e) {
  Event e;
  e.kind = EventKind::Saddle, e.position = pos, e.i = i, e.eps = eps, e.forward = g_to_e;
  return e;
}
Event Event::gcap(std::size_t pos, int i, int eps) {
  Event e;
  e.kind = EventKind::GCap, e.position = pos, e.i = i, e.eps = eps;
  return e;
}
Event Event::gcup(std::size_t pos, int i, int eps) {
  Event e;
  e.kind = EventKind::GCup, e.position = pos, e.i = i, e.eps = eps;
  return e;
}
Event Event::ecap(std::size_t pos, int i) {
  Event e;
  e.kind = EventKind::ECap, e.position = pos, e.i = i;
  return e;
}
Event Event::ecup(std::size_t pos, int i) {
  Event e;
  e.kind = EventKind::ECup, e.position = pos, e.i = i;
  return e;
}
Event Event::white(std::size_t pos, int i, int j, int variant, int eps, bool forward) {
  Event e;
  e.kind = EventKind::White, e.position = pos, e.i = i, e.j = j, e.variant = variant;
  e.eps = variant == 5 ? 1 : eps;
  e.forward = forward;
  return e;
}
Event Event::crossing(std::size_t pos, Letter left, Letter right) {
  Event e;
  e.kind = EventKind::Crossing, e.position = pos, e.a = left, e.b = right;
  return e;
}
Event Event::square8(std::size_t pos, int i, int j, bool forward) {
  Event e;
  e.kind = EventKind::Square8, e.position = pos, e.i = i, e.j = j, e.forward = forward;
  return e;
}
Event Event::square5(std::size_t pos, int variant, int i, int j, int eps, bool forward) {
  Event e;
  e.kind = EventKind::Square5, e.position = pos, e.variant = variant, e.i = i, e.j = j, e.eps = eps;
  e.forward = forward;
  return e;
}
Event Event::xtri(std::size_t pos, int i, bool merge) {
  Event e;
  e.kind = EventKind::XTri, e.position = pos, e.i = i, e.forward = merge;
  return e;
}
Event Event::branch(std::size_t pos, int i, int eps, BranchSide side, bool forward) {
  Event e;
  e.kind = EventKind::Branch, e.position = pos, e.i = i, e.eps = eps, e.side = side, e.forward = forward;
  return e;
}
Event Event::square6(std::size_t pos, int i, int j, int eps, int delta, bool forward) {
  Event e;
  e.kind = EventKind::Square6, e.position = pos, e.i = i, e.j = j, e.eps = eps, e.delta = delta;
  e.forward = forward;
  return e;
}
Event Event::xstar(std::size_t pos, int i, int below, int above) {
  Event e;
  e.kind = EventKind::XStar, e.position = pos, e.i = i, e.below = below, e.above = above;
  return e;
}
Event Event::square_star(std::size_t pos, int i, int left, int right, bool forward) {
  Event e;
  e.kind = EventKind::SquareStar, e.position = pos, e.i = i, e.left = left, e.right = right, e.forward = forward;
  return e;
}
Event Event::level() { return Event{}; }

std::string to_string(const Event& e) {
  std::ostringstream out;
  out << to_string(e.kind) << '@' << e.position;
  switch (e.kind) {
    case EventKind::Level: return out.str();
    case EventKind::Crossing:
      out << '(' << to_string(e.a) << ',' << to_string(e.b) << ')';
      return out.str();
    case EventKind::XStar:
      out << "(i=" << e.i << ",below=" << e.below << ",above=" << e.above << ')';
      return out.str();
    case EventKind::SquareStar:
      out << "(i=" << e.i << ",left=" << e.left << ",right=" << e.right << (e.forward ? ",fwd)" : ",bwd)");
      return out.str();
    default: break;
  }
  try {
    auto ev = event_rewrite(e, 1 << 20);
    out << '(' << letters_to_text(ev.source) << " -> " << letters_to_text(ev.target) << ')';
  } catch (const RewriteError&) {
    out << "(i=" << e.i << ",j=" << e.j << ",eps=" << e.eps << ",variant=" << e.variant << ')';
  }
  return out.str();
}

EventRewrite event_rewrite(const Event& e, int n) {
  auto g = [](int idx, int s) { return Letter::g(idx, s); };
  auto h = [](int idx) { return Letter::e(idx); };
  switch (e.kind) {
    case EventKind::Level:
      return {};
    case EventKind::BlackG:
      require_index(e, e.i, n, "i");
      require_sign(e, e.eps, "eps");
      return oriented({}, {g(e.i, e.eps)}, e.forward);
    case EventKind::XDot:
      require_index(e, e.i, n, "i");
      return oriented({}, {h(e.i)}, e.forward);
    case EventKind::Saddle:
      require_index(e, e.i, n, "i");
      require_sign(e, e.eps, "eps");
      return oriented({g(e.i, e.eps)}, {h(e.i)}, e.forward);
    case EventKind::GCap:
    case EventKind::GCup:
      require_index(e, e.i, n, "i");
      require_sign(e, e.eps, "eps");
      return oriented({}, {g(e.i, e.eps), g(e.i, -e.eps)}, e.kind == EventKind::GCap);
    case EventKind::ECap:
    case EventKind::ECup:
      require_index(e, e.i, n, "i");
      return oriented({}, {h(e.i), h(e.i)}, e.kind == EventKind::ECap);
    case EventKind::White: {
      RuleTag tag;
      switch (e.variant) {
        case 5: tag = RuleTag::R5; break;
        case 15: tag = RuleTag::D15; break;
        case 16: tag = RuleTag::D16; break;
        case 17: tag = RuleTag::D17; break;
        default: throw RewriteError(clause_of(e) + ": unknown rotation variant " + std::to_string(e.variant));
      }
      return from_rule(e, RuleId{tag, e.i, e.j, e.eps, 1, 0}, n, e.forward);
    }
    case EventKind::Crossing:
      require_index(e, e.a.index, n, "i");
      require_index(e, e.b.index, n, "j");
      if (std::abs(e.a.index - e.b.index) <= 1)
        throw RewriteError(clause_of(e) + ": labels " + to_string(e.a) + "," + to_string(e.b) +
                           " violate |i-j|>1");
      return {{e.a, e.b}, {e.b, e.a}};
    case EventKind::Square8:
      return from_rule(e, RuleId{RuleTag::R8, e.i, e.j, 1, 1, 0}, n, e.forward);
    case EventKind::Square5:
      if (e.variant != 6 && e.variant != 7)
        throw RewriteError(clause_of(e) + ": unknown reading variant " + std::to_string(e.variant));
      return from_rule(e, RuleId{e.variant == 6 ? RuleTag::R6 : RuleTag::R7, e.i, e.j, e.eps, 1, 0}, n, e.forward);
    case EventKind::XTri:
      return from_rule(e, RuleId{RuleTag::R12, e.i, 0, 1, 1, 0}, n, e.forward);
    case EventKind::Branch:
      return from_rule(e, RuleId{e.side == BranchSide::Left ? RuleTag::D20 : RuleTag::D21, e.i, 0, e.eps, 1, 0}, n,
                       e.forward);
    case EventKind::Square6:
      return from_rule(e, RuleId{RuleTag::D22, e.i, e.j, e.eps, e.delta, 0}, n, e.forward);
    case EventKind::XStar: {
      require_index(e, e.i, n, "i");
      if (e.below < 1 || e.above < 1 || e.below + e.above < 3)
        throw RewriteError(clause_of(e) + ": needs at least one edge on each side and degree m>2");
      return {std::vector<Letter>(static_cast<std::size_t>(e.below), h(e.i)),
              std::vector<Letter>(static_cast<std::size_t>(e.above), h(e.i))};
    }
    case EventKind::SquareStar: {
      require_index(e, e.i, n, "i");
      if (e.left == 0 && e.right == 0)
        throw RewriteError(clause_of(e) + ": needs at least one g-edge (degree m>2)");
      std::vector<Letter> out(static_cast<std::size_t>(std::abs(e.left)), g(e.i, e.left > 0 ? 1 : -1));
      out.push_back(h(e.i));
      out.insert(out.end(), static_cast<std::size_t>(std::abs(e.right)), g(e.i, e.right > 0 ? 1 : -1));
      return oriented({h(e.i)}, std::move(out), e.forward);
    }
  }
  throw RewriteError("unknown event kind");
}

Event inverse(const Event& e) {
  Event out = e;
  switch (e.kind) {
    case EventKind::GCap: out.kind = EventKind::GCup; break;
    case EventKind::GCup: out.kind = EventKind::GCap; break;
    case EventKind::ECap: out.kind = EventKind::ECup; break;
    case EventKind::ECup: out.kind = EventKind::ECap; break;
    case EventKind::Crossing: std::swap(out.a, out.b); break;
    case EventKind::XStar: std::swap(out.below, out.above); break;
    case EventKind::Level: break;
    default: out.forward = !e.forward; break;
  }
  return out;
}

Word apply_event(const Word& w, const Event& e) {
  auto rw = event_rewrite(e, w.degree());
  if (e.position > w.size())
    throw RewriteError("position " + std::to_string(e.position) + " out of range for slice '" + word_to_text(w) +
                       "'");
  if (!w.has_factor(e.position, rw.source))
    throw RewriteError(clause_of(e) + ": expected '" + letters_to_text(rw.source) + "' at position " +
                       std::to_string(e.position) + " of '" + word_to_text(w) + "'");
  return w.splice(e.position, rw.source.size(), rw.target);
}

std::vector<Word> movie_slices(const ChartMovie& m) {
  if (m.start.degree() != m.degree) throw ValidationError("start word degree differs from movie degree");
  std::vector<Word> out{m.start};
  out.reserve(m.events.size() + 1);
  for (std::size_t k = 0; k < m.events.size(); ++k) {
    try {
      out.push_back(apply_event(out.back(), m.events[k]));
    } catch (const RewriteError& err) {
      throw ValidationError("event " + std::to_string(k) + ": " + err.what());
    }
  }
  return out;
}

Word movie_slice(const ChartMovie& m, std::size_t level) {
  if (level > m.events.size())
    throw RewriteError("level " + std::to_string(level) + " out of range (movie has " +
                       std::to_string(m.events.size()) + " events)");
  ChartMovie prefix{m.degree, m.start, {m.events.begin(), m.events.begin() + static_cast<std::ptrdiff_t>(level)}};
  return movie_slices(prefix).back();
}

Word final_word(const ChartMovie& m) { return movie_slices(m).back(); }

ValidationReport validate_movie(const ChartMovie& m) {
  ValidationReport report;
  if (m.start.degree() != m.degree) {
    report.valid = false;
    report.start_message = "start word has degree " + std::to_string(m.start.degree()) + ", movie has degree " +
                           std::to_string(m.degree);
    return report;
  }
  Word slice = m.start;
  for (std::size_t k = 0; k < m.events.size(); ++k) {
    const auto& e = m.events[k];
    EventCheck check{k, true, clause_of(e), {}};
    try {
      slice = apply_event(slice, e);
    } catch (const RewriteError& err) {
      check.ok = false;
      check.message = err.what();
    }
    report.events.push_back(check);
    if (!check.ok) {
      report.valid = false;
      report.first_failure = k;
      break;
    }
  }
  return report;
}

std::string to_string(const ValidationReport& r) {
  std::ostringstream out;
  if (!r.start_message.empty()) out << "start: " << r.start_message << '\n';
  for (const auto& c : r.events)
    if (c.ok)
      out << "event " << c.index << " [" << c.clause << "]: ok\n";
    else
      out << "event " << c.index << ": FAIL " << c.message << '\n';
  out << (r.valid ? "valid" : "invalid");
  if (r.first_failure) out << " (first failure at event " << *r.first_failure << ')';
  out << '\n';
  return out.str();
}

void require_valid(const ChartMovie& m) {
  auto r = validate_movie(m);
  if (!r.valid) {
    if (!r.start_message.empty()) throw ValidationError(r.start_message);
    throw ValidationError("event " + std::to_string(*r.first_failure) + ": " + r.events.back().message);
  }
}

std::string to_string(Regularity r) { return r == Regularity::Regular ? "regular" : "non-regular"; }

Regularity classify(const ChartMovie& m) {
  require_valid(m);
  for (const auto& e : m.events)
    if (e.kind == EventKind::Branch || e.kind == EventKind::SquareStar) return Regularity::NonRegular;
  return Regularity::Regular;
}

bool has_e_caps(const ChartMovie& m) {
  for (const auto& e : m.events)
    if (e.kind == EventKind::ECap || e.kind == EventKind::ECup) return true;
  return false;
}

ChartMovie normalize_caps(const ChartMovie& m) {
  require_valid(m);
  ChartMovie out{m.degree, m.start, {}};
  for (const auto& e : m.events) {
    if (e.kind == EventKind::ECap) {
      out.events.push_back(Event::xdot(e.position, e.i, true));
      out.events.push_back(Event::xtri(e.position, e.i, false));
    } else if (e.kind == EventKind::ECup) {
      out.events.push_back(Event::xtri(e.position, e.i, true));
      out.events.push_back(Event::xdot(e.position, e.i, false));
    } else {
      out.events.push_back(e);
    }
  }
  return out;
}

ChartMovie strip_levels(const ChartMovie& m) {
  ChartMovie out{m.degree, m.start, {}};
  for (const auto& e : m.events)
    if (e.kind != EventKind::Level) out.events.push_back(e);
  return out;
}

}  // namespace bmw
