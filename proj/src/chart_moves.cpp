#include "bmw/chart_moves.hpp"

#include <array>
#include <map>
#include <mutex>

#include "bmw/io.hpp"
#include "moves_internal.hpp"

namespace bmw {

namespace {

constexpr std::array<std::string_view, 7> kMoveNames = {"CI-loop", "CI-commute", "CI-white-cancel", "CII",
                                                        "CIII",    "TangleB",    "TangleC"};

const std::vector<detail::ConcreteMove>& concrete_moves(const std::vector<MoveTemplate>* templates, int degree) {
  static std::mutex mu;
  static std::map<std::pair<const void*, int>, std::vector<detail::ConcreteMove>> cache;
  const auto* t = templates ? templates : &default_templates();
  std::lock_guard lock(mu);
  auto key = std::make_pair(static_cast<const void*>(t), degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, detail::instantiate(*t, degree)).first;
  return it->second;
}

Event at(Event e, std::size_t pos) {
  e.position = pos;
  return e;
}

std::vector<Event> shifted(const std::vector<Event>& events, std::size_t offset) {
  std::vector<Event> out;
  for (const auto& e : events) out.push_back(at(e, e.position + offset));
  return out;
}

bool has_hook_pair(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].is_hook() && w[k] == w[k + 1]) return true;
  return false;
}

bool forbidden_in_tangle_b(EventKind k, bool b2prime) {
  switch (k) {
    case EventKind::BlackG:
    case EventKind::XDot:
    case EventKind::Saddle:
    case EventKind::XTri:
    case EventKind::XStar:
      return true;
    case EventKind::Square6:
    case EventKind::SquareStar:
      return !b2prime;
    default:
      return false;
  }
}

class Finder {
 public:
  Finder(const ChartMovie& m, const MoveOptions& o) : m_(m), o_(o), slices_(movie_slices(m)) {}

  std::vector<MoveInstance> run() {
    if (wants(MoveKind::CICommute)) commute();
    if (wants(MoveKind::CILoop)) loops();
    if (wants(MoveKind::CIWhiteCancel)) whites();
    if (wants(MoveKind::CII) || wants(MoveKind::CIII)) templates();
    if (wants(MoveKind::TangleB)) tangle_b();
    if (wants(MoveKind::TangleC)) tangle_c();
    return std::move(out_);
  }

 private:
  bool wants(MoveKind k) const { return o_.kinds.contains(k); }
  std::size_t L() const { return m_.events.size(); }
  const Event& ev(std::size_t k) const { return m_.events[k]; }

  void add(MoveKind kind, std::size_t begin, std::size_t end, std::vector<Event> repl, std::string label) {
    out_.push_back({kind, begin, end, std::move(repl), std::move(label)});
  }

  bool replays_to(std::size_t level, const std::vector<Event>& events, const Word& target) const {
    try {
      Word w = slices_[level];
      for (const auto& e : events) w = apply_event(w, e);
      return w == target;
    } catch (const RewriteError&) {
      return false;
    }
  }

  void commute() {
    for (std::size_t k = 0; k + 1 < L(); ++k) {
      const Event &e1 = ev(k), &e2 = ev(k + 1);
      if (e1.kind == EventKind::Level || e2.kind == EventKind::Level) continue;
      const auto r1 = event_rewrite(e1, m_.degree), r2 = event_rewrite(e2, m_.degree);
      const std::size_t p1 = e1.position, p2 = e2.position;
      const std::size_t a1 = r1.source.size(), b1 = r1.target.size(), a2 = r2.source.size(), b2 = r2.target.size();
      std::vector<Event> repl;
      if (p2 + a2 <= p1)
        repl = {e2, at(e1, p1 + b2 - a2)};
      else if (p2 >= p1 + b1)
        repl = {at(e2, p2 - b1 + a1), e1};
      else
        continue;
      if (repl[0] == e1 && repl[1] == e2) continue;
      if (!replays_to(k, repl, slices_[k + 2])) continue;
      add(MoveKind::CICommute, k, k + 2, repl, "exchange levels " + std::to_string(k) + "," + std::to_string(k + 1));
    }
  }

  void loops() {
    for (std::size_t k = 0; k + 1 < L(); ++k) {
      const Event &a = ev(k), &b = ev(k + 1);
      if (a.kind == EventKind::GCap && b.kind == EventKind::GCup && a.position == b.position && a.i == b.i &&
          a.eps == b.eps)
        add(MoveKind::CILoop, k, k + 2, {}, "remove closed g-loop");
    }
    if (!o_.insertions) return;
    for (std::size_t k = 0; k <= L(); ++k)
      for (std::size_t p = 0; p <= slices_[k].size(); ++p)
        for (int i = 1; i < m_.degree; ++i)
          for (int s : {1, -1})
            add(MoveKind::CILoop, k, k, {Event::gcap(p, i, s), Event::gcup(p, i, s)}, "insert closed g-loop");
  }

  void whites() {
    for (std::size_t k = 0; k + 1 < L(); ++k)
      if (ev(k).kind == EventKind::White && ev(k + 1) == inverse(ev(k)))
        add(MoveKind::CIWhiteCancel, k, k + 2, {}, "cancel white vertex pair");
    if (!o_.insertions) return;
    for (std::size_t k = 0; k <= L(); ++k) {
      const Word& w = slices_[k];
      for (std::size_t p = 0; p + 3 <= w.size(); ++p)
        for (int i = 1; i < m_.degree; ++i)
          for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= m_.degree) continue;
            for (bool f : {true, false}) {
              const Event e = Event::white(p, i, j, 5, 1, f);
              const auto rw = event_rewrite(e, m_.degree);
              if (w.has_factor(p, rw.source))
                add(MoveKind::CIWhiteCancel, k, k, {e, inverse(e)}, "insert white vertex pair");
            }
          }
    }
  }

  void templates() {
    for (const auto& cm : concrete_moves(o_.templates, m_.degree)) {
      if (!wants(cm.kind)) continue;
      const std::size_t len = cm.from.size();
      for (std::size_t k = 0; k + len <= L(); ++k) {
        if (ev(k).kind != cm.from[0].kind) continue;
        if (ev(k).position < cm.from[0].position) continue;
        const std::size_t base = ev(k).position - cm.from[0].position;
        if (!slices_[k].has_factor(base, cm.context)) continue;
        bool match = true;
        for (std::size_t t = 0; t < len && match; ++t) match = ev(k + t) == at(cm.from[t], cm.from[t].position + base);
        if (match) add(cm.kind, k, k + len, shifted(cm.to, base), cm.name);
      }
    }
  }

  void tangle_b() {
    for (std::size_t k = 0; k < L(); ++k) {
      for (std::size_t w = 1; k + 2 * w <= L() && 2 * w <= o_.window; ++w) {
        if (forbidden_in_tangle_b(ev(k + w - 1).kind, o_.b2prime)) break;
        bool mirror = true;
        for (std::size_t t = 0; t < w && mirror; ++t) mirror = ev(k + w + t) == inverse(ev(k + w - 1 - t));
        if (!mirror) continue;
        bool hooks = false;
        for (std::size_t s = k; s <= k + 2 * w && !hooks; ++s) hooks = has_hook_pair(slices_[s]);
        if (hooks) continue;
        add(MoveKind::TangleB, k, k + 2 * w, {}, "collapse mirrored span");
      }
    }
  }

  void tangle_c() {
    for (std::size_t k = 0; k < L(); ++k) {
      const Event& a = ev(k);
      const std::size_t p = a.position;
      const int i = a.i;
      if (a.kind == EventKind::ECap)
        add(MoveKind::TangleC, k, k + 1, {Event::xdot(p, i, true), Event::xtri(p, i, false)},
            "e-edge minimum to x-marks");
      if (a.kind == EventKind::ECup)
        add(MoveKind::TangleC, k, k + 1, {Event::xtri(p, i, true), Event::xdot(p, i, false)},
            "e-edge maximum to x-marks");
      if (k + 1 >= L()) continue;
      const Event& b = ev(k + 1);
      if (a == Event::xdot(p, i, true) && b == Event::xtri(p, i, false))
        add(MoveKind::TangleC, k, k + 2, {Event::ecap(p, i)}, "x-marks to e-edge minimum");
      if (a == Event::xtri(p, i, true) && b == Event::xdot(p, i, false))
        add(MoveKind::TangleC, k, k + 2, {Event::ecup(p, i)}, "x-marks to e-edge maximum");
      if (a == Event::ecap(p, i) && b == Event::ecup(p, i))
        add(MoveKind::TangleC, k, k + 2,
            {Event::xdot(p, i, true), Event::xtri(p, i, false), Event::xtri(p, i, true), Event::xdot(p, i, false)},
            "closed e-loop to x-marks");
      if (k + 3 < L() && a == Event::xdot(p, i, true) && b == Event::xtri(p, i, false) &&
          ev(k + 2) == Event::xtri(p, i, true) && ev(k + 3) == Event::xdot(p, i, false))
        add(MoveKind::TangleC, k, k + 4, {Event::ecap(p, i), Event::ecup(p, i)}, "x-marks to closed e-loop");
    }
  }

  const ChartMovie& m_;
  const MoveOptions& o_;
  std::vector<Word> slices_;
  std::vector<MoveInstance> out_;
};

}  // namespace

std::string to_string(MoveKind k) { return std::string(kMoveNames[static_cast<std::size_t>(k)]); }

std::optional<MoveKind> parse_move_kind(std::string_view text) {
  for (std::size_t k = 0; k < kMoveNames.size(); ++k)
    if (kMoveNames[k] == text) return static_cast<MoveKind>(k);
  return std::nullopt;
}

const std::set<MoveKind>& all_move_kinds() {
  static const std::set<MoveKind> all = {MoveKind::CILoop, MoveKind::CICommute, MoveKind::CIWhiteCancel,
                                         MoveKind::CII,    MoveKind::CIII,      MoveKind::TangleB,
                                         MoveKind::TangleC};
  return all;
}

std::vector<MoveInstance> applicable_moves(const ChartMovie& m, const MoveOptions& options) {
  require_valid(m);
  return Finder(m, options).run();
}

ChartMovie splice_move(const ChartMovie& m, const MoveInstance& inst) {
  if (inst.begin > inst.end || inst.end > m.events.size()) throw RewriteError("move span out of range");
  ChartMovie out{m.degree, m.start, {}};
  out.events.assign(m.events.begin(), m.events.begin() + static_cast<std::ptrdiff_t>(inst.begin));
  out.events.insert(out.events.end(), inst.replacement.begin(), inst.replacement.end());
  out.events.insert(out.events.end(), m.events.begin() + static_cast<std::ptrdiff_t>(inst.end), m.events.end());
  return out;
}

ChartMovie apply_chart_move(const ChartMovie& m, const MoveInstance& inst, const MoveOptions& options) {
  MoveOptions o = options;
  o.kinds = {inst.kind};
  o.insertions = true;
  o.window = std::max(o.window, inst.end - inst.begin);
  for (const auto& cand : applicable_moves(m, o))
    if (cand.begin == inst.begin && cand.end == inst.end && cand.replacement == inst.replacement)
      return splice_move(m, inst);
  throw RewriteError(to_string(inst.kind) + " move on events [" + std::to_string(inst.begin) + "," +
                     std::to_string(inst.end) + ") is not applicable");
}

std::string canonical_key(const ChartMovie& m) { return movie_to_json(strip_levels(m)).dump(); }

std::uint64_t canonical_hash(const ChartMovie& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_key(m)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ChartMovie replay_witness(const ChartMovie& a, const std::vector<MoveInstance>& witness, const MoveOptions& options) {
  ChartMovie cur = a;
  for (std::size_t k = 0; k < witness.size(); ++k) {
    try {
      cur = apply_chart_move(cur, witness[k], options);
    } catch (const RewriteError& e) {
      throw RewriteError("witness step " + std::to_string(k) + ": " + e.what());
    }
  }
  return cur;
}

}  // namespace bmw
