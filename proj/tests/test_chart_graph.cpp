#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bmw/chart_graph.hpp"
#include "corpus.hpp"

using namespace bmw;

namespace {

std::vector<Word> slices(const ChartMovie& m) { return movie_slices(strip_levels(m)); }

ChartGraph without_positions(ChartGraph g) {
  for (auto& v : g.vertices) v.pos.reset();
  for (auto& e : g.edges) e.points.clear();
  return g;
}

}  // namespace

TEST_CASE("movie to chart to movie") {
  for (const auto& [name, m] : corpus::movies()) {
    INFO(name);
    const auto g = movie_to_chart_graph(m);
    const auto report = validate_chart_graph(g);
    CHECK_MESSAGE(report.valid, to_string(report));
    if (!report.valid) continue;
    const auto back = chart_graph_to_movie(g);
    CHECK(slices(back) == slices(m));
  }
}

TEST_CASE("e-edge extrema need the option") {
  for (const auto& [name, m] : corpus::movies_with_e_caps()) {
    INFO(name);
    CHECK_THROWS(movie_to_chart_graph(m));
    const auto g = movie_to_chart_graph(m, {true});
    CHECK(slices(chart_graph_to_movie(g)) == slices(m));
  }
}

TEST_CASE("vertex census") {
  const ChartMovie m{4, parse_word("g1 g3 e2", 4),
                     {Event::crossing(0, Letter::g(1), Letter::g(3)), Event::saddle(1, 1, 1, true),
                      Event::xdot(2, 2, false), Event::black(0, 3, 1, false)}};
  const auto g = movie_to_chart_graph(m);
  CHECK(count_vertices(g, "b") == 1);
  CHECK(count_vertices(g, "e") == 1);
  CHECK(count_vertices(g, "d") == 1);
  CHECK(count_vertices(g, "a") == 1);
  for (const auto& v : g.vertices) {
    if (v.type == "b") CHECK(vertex_degree(g, v.id) == 4);
    if (v.type == "a" || v.type == "d") CHECK(vertex_degree(g, v.id) == 1);
  }
}

TEST_CASE("clockwise order around a crossing alternates strands") {
  const ChartMovie m{4, parse_word("g1 G3", 4), {Event::crossing(0, Letter::g(1), Letter::g(3, -1))}};
  const auto g = movie_to_chart_graph(m);
  REQUIRE(g.vertices.size() == 1);
  const auto ends = clockwise_ends(g, g.vertices[0].id);
  REQUIRE(ends.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(ends[k].index == ends[(k + 2) % 4].index);
  CHECK(ends[0].index != ends[1].index);
  int in = 0;
  for (const auto& e : ends) in += e.flow;
  CHECK(in == 0);
}

TEST_CASE("layout of a chart without coordinates") {
  for (const auto& [name, m] : corpus::movies()) {
    INFO(name);
    const auto bare = without_positions(movie_to_chart_graph(m));
    const auto placed = with_layout(bare);
    for (const auto& v : placed.vertices) CHECK(v.pos.has_value());
    // best effort: when the layout sweeps, the boundary words survive
    if (validate_chart_graph(bare).valid) {
      const auto back = chart_graph_to_movie(bare);
      CHECK(back.start == strip_levels(m).start);
      CHECK(final_word(back) == final_word(m));
    }
  }
}

TEST_CASE("mutations are rejected at the mutated vertex or produce a valid chart") {
  std::set<std::string> named;
  for (const auto& [name, m] : corpus::movies()) {
    const auto g = movie_to_chart_graph(m);
    for (const auto& v : g.vertices)
      for (const auto& mut : corpus::edge_mutations(g, v.id)) {
        INFO(name << " vertex " << v.id << " " << mut.what);
        const auto r = validate_chart_graph(mut.graph);
        if (r.valid) {
          CHECK(validate_movie(chart_graph_to_movie(mut.graph)).valid);
          continue;
        }
        for (const auto& i : r.issues)
          if (i.vertex == v.id) named.insert(v.type);
      }
  }
  for (const char* t : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "i'", "j'"}) CHECK(named.contains(t));
}

TEST_CASE("structural problems") {
  auto g = movie_to_chart_graph({2, Word(2), {Event::black(0, 1, 1, true)}});
  auto bad = g;
  bad.edges[0].index = 2;
  CHECK_FALSE(validate_chart_graph(bad).valid);
  bad = g;
  bad.edges[0].orientation = EdgeOrientation::None;
  CHECK_FALSE(validate_chart_graph(bad).valid);
  bad = g;
  bad.vertices[0].type = "z";
  CHECK_FALSE(validate_chart_graph(bad).valid);
  CHECK_THROWS_AS(chart_graph_to_movie(bad), ValidationError);
}
