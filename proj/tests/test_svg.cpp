#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bmw/io.hpp"
#include "bmw/svg.hpp"
#include "corpus.hpp"

using namespace bmw;

namespace {

ChartMovie data(const std::string& file) { return load_movie(read_text_file(std::string(BMW_TEST_DATA) + "/" + file)); }

std::size_t occurrences(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("every corpus movie renders both ways") {
  for (const auto& [name, m] : corpus::movies()) {
    INFO(name);
    RenderSpec spec;
    const auto chart = render_svg(m, spec);
    CHECK(chart.starts_with("<?xml"));
    CHECK(chart.find("<svg") != std::string::npos);
    CHECK(occurrences(chart, "class=\"vertex") == movie_to_chart_graph(m).vertices.size());
    spec.target = RenderTarget::MovieStrip;
    const auto strip = render_svg(m, spec);
    CHECK(occurrences(strip, "class=\"panel\"") == m.events.size() + 1);
  }
}

TEST_CASE("the single-arc pictures") {
  const auto left = render_svg(data("hook-arc-cap.json"));
  const auto right = render_svg(data("hook-arc-xmarks.json"));
  CHECK(occurrences(left, "class=\"vertex") == 0);
  CHECK(occurrences(right, "data-type=\"d\"") == 1);
  CHECK(occurrences(right, "data-type=\"i\"") == 1);
  CHECK(occurrences(right, "data-degree=\"3\"") == 1);
}

TEST_CASE("output is deterministic") {
  const auto m = corpus::movies()[10].movie;
  CHECK(render_svg(m) == render_svg(m));
}

TEST_CASE("invalid charts are refused") {
  auto g = movie_to_chart_graph({2, Word(2), {Event::black(0, 1, 1, true)}});
  g.edges[0].label = 'e';
  g.edges[0].orientation = EdgeOrientation::None;
  CHECK_THROWS_AS(render_chart_svg(g), ValidationError);
}
