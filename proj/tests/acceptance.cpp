// Acceptance gate: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bmw/brauer.hpp"
#include "bmw/chart_graph.hpp"
#include "bmw/chart_moves.hpp"
#include "bmw/invariants.hpp"
#include "bmw/io.hpp"
#include "corpus.hpp"
#include "oracle/brauer_oracle.hpp"

using namespace bmw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<RuleTag> tags_between(RuleTag first, RuleTag last) {
  std::vector<RuleTag> out;
  for (int t = static_cast<int>(first); t <= static_cast<int>(last); ++t) out.push_back(static_cast<RuleTag>(t));
  return out;
}

Word random_word(std::mt19937& rng, int n, int len) {
  std::vector<Letter> l;
  std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 2);
  for (int k = 0; k < len; ++k) {
    const int i = idx(rng);
    const int c = kind(rng);
    l.push_back(c == 2 ? Letter::e(i) : Letter::g(i, c == 0 ? 1 : -1));
  }
  return Word(n, l);
}

BrauerDiagram traced(const Word& w) {
  std::vector<oracle::Tok> t;
  for (const auto& l : w.letters()) t.push_back({l.is_hook() ? 'e' : l.sign() > 0 ? 'g' : 'G', l.index});
  const auto d = oracle::trace(w.degree(), t);
  return BrauerDiagram(w.degree(), d.pairing, d.loops);
}

ChartMovie data(const std::string& file) { return load_movie(read_text_file(std::string(BMW_TEST_DATA) + "/" + file)); }

Outcome rule_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t instances = 0;
  for (int n = 2; n <= 5; ++n)
    for (auto tag : tags_between(RuleTag::R1, RuleTag::R14))
      for (const auto& r : rule_instances(tag, n)) {
        const auto s = rule_sides(r, n);
        for (std::size_t pad = 0; pad <= 2; ++pad) {
          std::vector<Letter> ctx(pad, Letter::e(1));
          ctx.insert(ctx.end(), s.left.begin(), s.left.end());
          ctx.push_back(Letter::g(n - 1, -1));
          const Word w(n, ctx);
          const Word f = apply_rule(w, r, pad, Direction::Forward);
          if (!f.has_factor(pad, s.right) || apply_rule(f, r, pad, Direction::Backward) != w)
            return {false, to_string(r) + " does not reverse at offset " + std::to_string(pad)};
          ++instances;
        }
      }

  std::mt19937 rng(20261015);
  std::size_t applied = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + trial % 4;
    const Word w = random_word(rng, n, static_cast<int>(rng() % 9));
    const auto tag = static_cast<RuleTag>(rng() % 14);
    const auto all = rule_instances(tag, n);
    if (all.empty()) continue;
    const auto& r = all[rng() % all.size()];
    const std::size_t pos = rng() % (w.size() + 1);
    const auto dir = rng() % 2 ? Direction::Forward : Direction::Backward;
    try {
      const Word out = apply_rule(w, r, pos, dir);
      Word(n, out.letters());  // re-validates every letter
      if (out.degree() != n) return {false, "degree changed"};
      ++applied;
    } catch (const RewriteError&) {
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10) return {false, "took " + std::to_string(secs) + " s"};
  std::ostringstream d;
  d << instances << " placed instances reverse; " << applied << "/10000 fuzz applications valid; " << secs << " s";
  return {true, d.str()};
}

std::vector<std::string> script_tags(const MoveScript& s) {
  std::vector<std::string> out;
  for (const auto& st : s.steps) out.push_back(to_string(st.rule.tag));
  return out;
}

Outcome derived_replay() {
  const std::set<RuleTag> allowed{RuleTag::R4, RuleTag::R5, RuleTag::R6,  RuleTag::R7,
                                  RuleTag::R9, RuleTag::R10, RuleTag::R13, RuleTag::R14};
  std::size_t count = 0;
  for (int n = 2; n <= 5; ++n)
    for (auto tag : tags_between(RuleTag::D15, RuleTag::D24))
      for (const auto& r : rule_instances(tag, n)) {
        const auto s = rule_sides(r, n);
        const auto script = expand_derived_rule(r, n);
        for (const auto& st : script.steps)
          if (!allowed.contains(st.rule.tag)) return {false, to_string(r) + " uses " + to_string(st.rule)};
        if (verify_move_script(Word(n, s.left), script) != Word(n, s.right))
          return {false, to_string(r) + " ends at the wrong word"};
        ++count;
      }

  // displayed chains
  const auto d15 = expand_derived_rule({RuleTag::D15, 1, 2, -1}, 3);
  const auto w15 = replay_move_script(parse_word("G1 G2 G1", 3), d15);
  bool passes = false;
  for (const auto& w : w15) passes |= word_to_text(w) == "G1 G2 G1 g2 g1 g2 G2 G1 G2";
  if (!passes || script_tags(d15) != std::vector<std::string>{"R4", "R4", "R4", "R5", "R4", "R4", "R4"})
    return {false, "D15 chain differs"};
  const auto d18 = script_tags(expand_derived_rule({RuleTag::D18, 1, 3, -1, -1}, 5));
  if (std::count(d18.begin(), d18.end(), "R9") != 1 ||
      std::count(d18.begin(), d18.end(), "R4") != static_cast<long>(d18.size()) - 1)
    return {false, "D18 chain differs"};
  if (script_tags(expand_derived_rule({RuleTag::D20, 1, 0, -1}, 2)) != std::vector<std::string>{"R4", "R13"})
    return {false, "D20 chain differs"};
  if (verify_move_script(parse_word("e1", 2), expand_derived_rule({RuleTag::D21, 1, 0, 1}, 2)) !=
      parse_word("e1 g1", 2))
    return {false, "D21 endpoint differs"};
  if (!expand_derived_rule({RuleTag::D23, 1, 0, 1, 1, 0}, 2).steps.empty()) return {false, "D23 k=0 not empty"};
  if (script_tags(expand_derived_rule({RuleTag::D22, 1, 2, 1, -1}, 3)) != std::vector<std::string>{"R6", "R7"})
    return {false, "D22 chain differs"};
  return {true, std::to_string(count) + " derived instances replayed; displayed chains match"};
}

Outcome brauer_oracle() {
  std::mt19937 rng(7);
  const std::set<RuleCategory> iso{RuleCategory::IsotopyRegular, RuleCategory::IsotopyRI, RuleCategory::Disk};
  std::size_t checked = 0, band = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + trial % 4;
    const Word w = random_word(rng, n, static_cast<int>(rng() % 11));
    const auto img = brauer_image(w);
    if (img != traced(w)) return {false, "image of " + word_to_text(w) + " disagrees with the tracer"};
    for (const auto& a : enumerate_rule_applications(w, iso)) {
      const auto out = brauer_image(apply_rule(w, a.rule, a.position, a.direction));
      if (a.rule.tag == RuleTag::R12) {
        const int dl = a.direction == Direction::Forward ? -1 : 1;
        if (out.pairing() != img.pairing() || out.loops() != img.loops() + dl)
          return {false, "R12 on " + word_to_text(w)};
      } else if (out != img) {
        return {false, to_string(a.rule) + " changes the image of " + word_to_text(w)};
      }
      ++checked;
    }
    for (const auto& a : enumerate_rule_applications(w, {RuleCategory::Band})) {
      const Word out = apply_rule(w, a.rule, a.position, a.direction);
      const auto s = rule_sides(a.rule, n);
      const auto& src = a.direction == Direction::Forward ? s.left : s.right;
      const auto& dst = a.direction == Direction::Forward ? s.right : s.left;
      const Word pre(n, {w.letters().begin(), w.letters().begin() + static_cast<long>(a.position)});
      const Word post(n, {w.letters().begin() + static_cast<long>(a.position + src.size()), w.letters().end()});
      const auto predicted = compose(compose(traced(pre), traced(Word(n, dst))), traced(post));
      if (brauer_image(out) != predicted || traced(out) != predicted)
        return {false, to_string(a.rule) + " on " + word_to_text(w)};
      ++band;
    }
  }
  return {true, std::to_string(checked) + " isotopy/disk and " + std::to_string(band) + " band applications"};
}

Outcome round_trip() {
  const auto all = corpus::movies();
  std::set<std::string> types;
  for (const auto& [name, m] : all) {
    const auto back = chart_graph_to_movie(movie_to_chart_graph(m));
    if (movie_slices(back) != movie_slices(strip_levels(m))) return {false, name + " changes its slices"};
    for (const auto& e : m.events) {
      auto v = vertex_type_of(e.kind, e.kind == EventKind::Crossing && (e.a.is_hook() || e.b.is_hook()));
      if (!v.empty()) types.insert(v);
    }
  }
  if (all.size() < 50) return {false, "corpus has only " + std::to_string(all.size()) + " movies"};
  if (types.size() != 13) return {false, "corpus covers only " + std::to_string(types.size()) + " vertex types"};
  return {true, std::to_string(all.size()) + " movies, 13 vertex types, slices identical"};
}

Outcome hook_loop_pictures() {
  const auto left = data("hook-loop-caps.json"), right = data("hook-loop-xmarks.json");
  const auto a = surface_invariants(normalize_caps(left)), b = surface_invariants(right);
  if (a != b) return {false, to_string(a) + " vs " + to_string(b)};
  if (a.euler_characteristic != 2 || a.boundary_components != 2) return {false, to_string(a)};
  SearchOptions o;
  o.depth = 1;
  const auto r = equivalent_bounded(left, right, o);
  if (r.status != SearchStatus::Found || r.witness.size() != 1 || r.witness[0].kind != MoveKind::TangleC)
    return {false, "search returned " + to_string(r.status)};
  if (replay_witness(left, r.witness) != right) return {false, "witness does not replay"};
  return {true, to_string(a) + "; depth-1 TangleC witness"};
}

Outcome tree_independence() {
  std::size_t trees = 0;
  for (int m = 2; m <= 5; ++m)
    for (int below = 1; below <= m + 1; ++below) {
      const int above = m + 2 - below;
      const Event star = Event::xstar(0, 1, below, above);
      const ChartMovie base{2, Word(2, std::vector<Letter>(static_cast<std::size_t>(below), Letter::e(1))), {star}};
      const auto expect = surface_invariants(base);
      for (const auto& t : xstar_tree_expansions(star)) {
        if (surface_invariants({2, base.start, t}) != expect)
          return {false, "tree of XStar(" + std::to_string(below) + "," + std::to_string(above) + ") differs"};
        ++trees;
      }
    }
  const ChartMovie disks{2, parse_word("e1 e1 e1", 2), {Event::xtri(0, 1, true), Event::xtri(0, 1, true)}};
  const int chi = surface_invariants(disks).euler_characteristic;
  if (chi != 4) return {false, "two merges give chi=" + std::to_string(chi)};
  if (surface_invariants({2, disks.start, {Event::xstar(0, 1, 3, 1)}}).euler_characteristic != 4)
    return {false, "XStar(3,1) does not give chi=4"};
  return {true, std::to_string(trees) + " tree resolutions agree; chi=4 for the 4-valent x-mark"};
}

Outcome move_soundness() {
  const auto all = corpus::movies();
  std::mt19937 rng(42);
  std::map<MoveKind, int> kinds;
  int applied = 0;
  MoveOptions o;
  o.window = 6;
  for (int trial = 0; applied < 1000 && trial < 5000; ++trial) {
    const auto& entry = all[rng() % all.size()];
    ChartMovie m = entry.movie;
    const auto inv = surface_invariants(m);
    for (int step = 0; step < 2; ++step) {
      const auto moves = applicable_moves(m, o);
      if (moves.empty()) break;
      // pick a kind first so that rare kinds are exercised
      std::vector<MoveKind> present;
      for (const auto& x : moves)
        if (std::find(present.begin(), present.end(), x.kind) == present.end()) present.push_back(x.kind);
      const MoveKind want = present[rng() % present.size()];
      std::vector<const MoveInstance*> pool;
      for (const auto& x : moves)
        if (x.kind == want) pool.push_back(&x);
      const auto& mv = *pool[rng() % pool.size()];
      m = apply_chart_move(m, mv, o);
      ++applied;
      ++kinds[mv.kind];
      if (!validate_movie(m).valid) return {false, entry.name + ": " + to_string(mv.kind) + " broke the movie"};
      if (m.start != entry.movie.start || final_word(m) != final_word(entry.movie))
        return {false, entry.name + ": " + to_string(mv.kind) + " changed a boundary word"};
      if (surface_invariants(normalize_caps(m)) != inv)
        return {false, entry.name + ": " + to_string(mv.kind) + " (" + mv.label + ") changed the surface"};
    }
  }
  std::ostringstream d;
  d << applied << " moves:";
  for (auto [k, c] : kinds) d << ' ' << to_string(k) << '=' << c;
  return {applied >= 1000, d.str()};
}

Outcome validation_taxonomy() {
  std::map<std::string, int> named;
  int rejected = 0, accepted = 0;
  for (const auto& [name, m] : corpus::movies()) {
    const auto g = movie_to_chart_graph(m);
    if (!validate_chart_graph(g).valid) return {false, name + " unmutated chart rejected"};
    for (const auto& v : g.vertices)
      for (const auto& mut : corpus::edge_mutations(g, v.id)) {
        const auto r = validate_chart_graph(mut.graph);
        if (r.valid) {
          // a legitimate chart after all; it must read as a valid movie
          if (!validate_movie(chart_graph_to_movie(mut.graph)).valid)
            return {false, name + ": " + mut.what + " accepted but unreadable"};
          if (mut.what.ends_with("label")) return {false, name + ": " + mut.what + " accepted"};
          ++accepted;
          continue;
        }
        ++rejected;
        bool at_vertex = false;
        for (const auto& i : r.issues) at_vertex |= i.vertex == v.id && !i.clause.empty() && i.clause[0] == '(';
        if (at_vertex) ++named[v.type];
      }
  }
  std::string missing;
  for (const char* t : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "i'", "j'"})
    if (!named.contains(t)) missing += std::string(" ") + t;
  if (!missing.empty()) return {false, "no mutation named clause" + missing};
  return {true, std::to_string(rejected) + " mutations rejected with the clause named at 13 vertex types, " +
                    std::to_string(accepted) + " legitimate relabelings accepted"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rule suite", rule_suite},
      {"derived rule replay", derived_replay},
      {"brauer oracle", brauer_oracle},
      {"movie/chart round trip", round_trip},
      {"hook loop equivalence", hook_loop_pictures},
      {"x-mark tree independence", tree_independence},
      {"chart move soundness", move_soundness},
      {"validation taxonomy", validation_taxonomy},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    failures += !o.ok;
  }
  return failures ? 1 : 0;
}
