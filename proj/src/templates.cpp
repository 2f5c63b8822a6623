#include <cstdlib>
#include <regex>

#include "bmw/io.hpp"
#include "moves_internal.hpp"
#include "templates_data.hpp"

namespace bmw {

using nlohmann::json;

namespace {

struct Binding {
  int i, j, e, d;
};

int sign_of(const std::string& v, const Binding& b) {
  if (v == "e") return b.e;
  if (v == "-e") return -b.e;
  if (v == "d") return b.d;
  if (v == "-d") return -b.d;
  throw ParseError("template: unknown sign '" + v + "'");
}

int index_of(const std::string& v, const Binding& b) {
  if (v == "i") return b.i;
  if (v == "j") return b.j;
  throw ParseError("template: unknown index '" + v + "'");
}

// "g(i,e)" -> "g1" / "G1", "e(j)" -> "e3"; other strings are variables.
json substitute(const json& v, const Binding& b) {
  if (v.is_object()) {
    json out = json::object();
    for (const auto& [k, x] : v.items()) out[k] = substitute(x, b);
    return out;
  }
  if (v.is_array()) {
    json out = json::array();
    for (const auto& x : v) out.push_back(substitute(x, b));
    return out;
  }
  if (!v.is_string()) return v;
  static const std::regex g_re(R"(g\(([ij]),(-?[ed])\))"), e_re(R"(e\(([ij])\))");
  const std::string s = v.get<std::string>();
  std::smatch m;
  if (std::regex_match(s, m, g_re))
    return (sign_of(m[2], b) > 0 ? "g" : "G") + std::to_string(index_of(m[1], b));
  if (std::regex_match(s, m, e_re)) return "e" + std::to_string(index_of(m[1], b));
  if (s == "i" || s == "j") return index_of(s, b);
  if (s == "e" || s == "-e" || s == "d" || s == "-d") return sign_of(s, b);
  return v;
}

std::vector<Event> events_of(const json& list, const Binding& b) {
  std::vector<Event> out;
  for (const auto& j : list) {
    Event e = event_from_json(substitute(j, b));
    if (e.kind == EventKind::White && e.variant == 15 && e.eps == 1) e.variant = 5;
    out.push_back(e);
  }
  return out;
}

bool replays(const Word& start, const std::vector<Event>& events, Word& end) {
  try {
    Word w = start;
    for (const auto& e : events) w = apply_event(w, e);
    end = w;
    return true;
  } catch (const RewriteError&) {
    return false;
  }
}

}  // namespace

std::vector<MoveTemplate> parse_templates(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("templates: ") + e.what());
  }
  if (!j.contains("templates") || !j["templates"].is_array()) throw ParseError("templates: missing 'templates' array");
  std::vector<MoveTemplate> out;
  for (const auto& t : j["templates"]) {
    MoveTemplate m;
    m.name = t.value("name", "");
    const auto kind = parse_move_kind(t.value("kind", ""));
    if (!kind || (*kind != MoveKind::CII && *kind != MoveKind::CIII))
      throw ParseError("template '" + m.name + "': kind must be CII or CIII");
    m.kind = *kind;
    m.relation = t.value("relation", "");
    if (m.relation != "distant" && m.relation != "adjacent")
      throw ParseError("template '" + m.name + "': relation must be distant or adjacent");
    for (const auto& c : t.at("context")) m.context.push_back(c.get<std::string>());
    m.left = t.at("left");
    m.right = t.at("right");
    if (!m.left.is_array() || !m.right.is_array() || m.left.empty() || m.right.empty())
      throw ParseError("template '" + m.name + "': left and right must be non-empty event lists");
    out.push_back(std::move(m));
  }
  return out;
}

const std::vector<MoveTemplate>& default_templates() {
  static const std::vector<MoveTemplate> templates = parse_templates(detail::kDefaultTemplates);
  return templates;
}

namespace detail {

std::vector<Event> reversed_inverse(const std::vector<Event>& events) {
  std::vector<Event> out;
  for (auto it = events.rbegin(); it != events.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::vector<ConcreteMove> instantiate(const std::vector<MoveTemplate>& templates, int n) {
  std::vector<ConcreteMove> out;
  for (const auto& t : templates) {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const int gap = std::abs(i - j);
        if (t.relation == "distant" ? gap <= 1 : gap != 1) continue;
        for (int e : {1, -1})
          for (int d : {1, -1}) {
            const Binding b{i, j, e, d};
            std::vector<Letter> ctx;
            for (const auto& c : t.context) ctx.push_back(parse_letter(substitute(c, b).get<std::string>(), n));
            const auto left = events_of(t.left, b), right = events_of(t.right, b);
            const Word start(n, ctx);
            Word end_l(n), end_r(n);
            if (!replays(start, left, end_l) || !replays(start, right, end_r) || end_l != end_r)
              throw ParseError("template '" + t.name + "' is inconsistent at i=" + std::to_string(i) +
                               " j=" + std::to_string(j));
            const auto rl = reversed_inverse(left), rr = reversed_inverse(right);
            out.push_back({t.name, t.kind, ctx, left, right});
            out.push_back({t.name + " (reversed)", t.kind, ctx, right, left});
            out.push_back({t.name + " (time-mirrored)", t.kind, end_l.letters(), rl, rr});
            out.push_back({t.name + " (time-mirrored, reversed)", t.kind, end_l.letters(), rr, rl});
          }
      }
  }
  // Templates whose signs ignore d produce duplicates.
  std::vector<ConcreteMove> unique;
  for (auto& m : out) {
    bool seen = false;
    for (const auto& u : unique)
      seen = seen || (u.context == m.context && u.from == m.from && u.to == m.to);
    if (!seen) unique.push_back(std::move(m));
  }
  return unique;
}

}  // namespace detail

}  // namespace bmw
