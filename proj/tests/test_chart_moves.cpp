#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bmw/chart_moves.hpp"
#include "bmw/invariants.hpp"
#include "bmw/io.hpp"
#include "corpus.hpp"

using namespace bmw;

namespace {

ChartMovie data(const std::string& file) { return load_movie(read_text_file(std::string(BMW_TEST_DATA) + "/" + file)); }

bool has(const std::vector<MoveInstance>& moves, MoveKind k) {
  return std::any_of(moves.begin(), moves.end(), [&](auto& m) { return m.kind == k; });
}

}  // namespace

TEST_CASE("kind names") {
  for (auto k : all_move_kinds()) CHECK(parse_move_kind(to_string(k)) == k);
  CHECK(all_move_kinds().size() == 7);
}

TEST_CASE("templates") {
  const auto& t = default_templates();
  CHECK(t.size() == 6);
  CHECK_THROWS(parse_templates("{"));
  CHECK_THROWS(parse_templates(R"([{"name":"x","kind":"CII","relation":"sideways","context":[],"left":[],"right":[]}])"));
}

TEST_CASE("commuting levels") {
  const ChartMovie m{4, Word(4), {Event::black(0, 1, 1, true), Event::xdot(1, 3, true)}};
  MoveOptions o;
  o.kinds = {MoveKind::CICommute};
  const auto moves = applicable_moves(m, o);
  REQUIRE(moves.size() == 1);
  const auto swapped = apply_chart_move(m, moves[0], o);
  CHECK(swapped.events[0].kind == EventKind::XDot);
  CHECK(final_word(swapped) == final_word(m));
}

TEST_CASE("loops and white pairs") {
  const ChartMovie m{3, Word(3), {Event::gcap(0, 1, 1), Event::gcup(0, 1, 1)}};
  MoveOptions o;
  o.kinds = {MoveKind::CILoop};
  o.insertions = false;
  const auto moves = applicable_moves(m, o);
  REQUIRE(moves.size() == 1);
  CHECK(apply_chart_move(m, moves[0], o).events.empty());

  const ChartMovie w{3, parse_word("g1 g2 g1", 3),
                     {Event::white(0, 1, 2, 5, 1, true), Event::white(0, 1, 2, 5, 1, false)}};
  o.kinds = {MoveKind::CIWhiteCancel};
  CHECK(has(applicable_moves(w, o), MoveKind::CIWhiteCancel));
}

TEST_CASE("applying a move that does not apply") {
  const ChartMovie m{3, Word(3), {Event::black(0, 1, 1, true)}};
  MoveInstance bogus{MoveKind::CILoop, 0, 1, {}, "nonsense"};
  CHECK_THROWS_AS(apply_chart_move(m, bogus), RewriteError);
}

TEST_CASE("mirrored spans") {
  // g1 created, moved through a distant crossing and back
  const ChartMovie m{4, parse_word("g3", 4),
                     {Event::black(0, 1, 1, true), Event::crossing(0, Letter::g(1), Letter::g(3)),
                      Event::crossing(0, Letter::g(3), Letter::g(1))}};
  MoveOptions o;
  o.kinds = {MoveKind::TangleB};
  CHECK(has(applicable_moves(m, o), MoveKind::TangleB));

  // x-marks inside a span are never removable
  const ChartMovie x{2, parse_word("e1", 2), {Event::xtri(0, 1, false), Event::xtri(0, 1, true)}};
  CHECK_FALSE(has(applicable_moves(x, o), MoveKind::TangleB));
}

TEST_CASE("moves keep movies valid and surfaces unchanged") {
  std::mt19937 rng(3);
  int applied = 0;
  for (const auto& [name, m] : corpus::movies()) {
    const auto moves = applicable_moves(m);
    if (moves.empty()) continue;
    for (int t = 0; t < 3; ++t) {
      const auto& mv = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      INFO(name << " " << to_string(mv.kind) << " " << mv.label);
      const auto next = apply_chart_move(m, mv);
      CHECK(validate_movie(next).valid);
      CHECK(next.start == m.start);
      CHECK(final_word(next) == final_word(m));
      CHECK(surface_invariants(normalize_caps(next)) == surface_invariants(m));
      ++applied;
    }
  }
  CHECK(applied > 100);
}

TEST_CASE("canonical keys ignore levels") {
  const ChartMovie a{2, Word(2), {Event::black(0, 1, 1, true)}};
  const ChartMovie b{2, Word(2), {Event::level(), Event::black(0, 1, 1, true), Event::level()}};
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_hash(a) == canonical_hash(b));
  CHECK(canonical_hash(a) != canonical_hash({2, Word(2), {Event::black(0, 1, -1, true)}}));
}

TEST_CASE("search") {
  const auto left = data("hook-loop-caps.json"), right = data("hook-loop-xmarks.json");
  SearchOptions o;
  o.depth = 1;
  const auto r = equivalent_bounded(left, right, o);
  REQUIRE(r.status == SearchStatus::Found);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0].kind == MoveKind::TangleC);
  CHECK(replay_witness(left, r.witness) == right);

  o.threads = 4;
  const auto par = equivalent_bounded(left, right, o);
  CHECK(par.witness == r.witness);

  CHECK(equivalent_bounded(left, left).witness.empty());
  CHECK(equivalent_bounded(left, left).status == SearchStatus::Found);

  o.budget = 2;
  o.depth = 4;
  CHECK(equivalent_bounded(left, data("three-hooks.json"), o).status == SearchStatus::BudgetExhausted);
  CHECK_THROWS(equivalent_bounded(left, ChartMovie{3, Word(3), {}}));
}

TEST_CASE("search results are independent of the thread count") {
  const ChartMovie a{4, parse_word("g3", 4), {Event::black(0, 1, 1, true), Event::crossing(0, Letter::g(1), Letter::g(3))}};
  const ChartMovie b{4, parse_word("g3", 4), {Event::black(1, 1, 1, true)}};
  SearchOptions o;
  o.depth = 2;
  o.budget = 5000;
  const auto one = equivalent_bounded(a, b, o);
  o.threads = 3;
  const auto three = equivalent_bounded(a, b, o);
  CHECK(one.status == three.status);
  CHECK(one.witness == three.witness);
  CHECK(one.explored == three.explored);
}
