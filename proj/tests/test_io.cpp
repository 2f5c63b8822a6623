#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bmw/io.hpp"
#include "corpus.hpp"

using namespace bmw;

TEST_CASE("movie files round trip") {
  auto all = corpus::movies();
  for (auto& e : corpus::movies_with_e_caps()) all.push_back(e);
  for (const auto& [name, m] : all) {
    INFO(name);
    const auto text = save_movie(m);
    CHECK(load_movie(text) == m);
    CHECK(save_movie(load_movie(text)) == text);
  }
}

TEST_CASE("chart files round trip") {
  for (const auto& [name, m] : corpus::movies()) {
    INFO(name);
    const auto g = movie_to_chart_graph(m);
    CHECK(load_chart(save_chart(g)) == g);
  }
}

TEST_CASE("event encoding") {
  const auto j = event_to_json(Event::crossing(2, Letter::e(1), Letter::g(3, -1)));
  CHECK(j["kind"] == "Crossing");
  CHECK(j["position"] == 2);
  CHECK(j["params"]["left"] == "e1");
  CHECK(j["params"]["right"] == "G3");
  CHECK(event_from_json(event_to_json(Event::branch(0, 1, -1, BranchSide::Right, false))) ==
        Event::branch(0, 1, -1, BranchSide::Right, false));
}

TEST_CASE("strict parsing") {
  using nlohmann::json;
  CHECK_THROWS_AS(load_movie("not json"), ParseError);
  CHECK_THROWS_AS(event_from_json(json::parse(R"({"kind":"Nope","position":0,"params":{}})")), ParseError);
  CHECK_THROWS_AS(event_from_json(json::parse(R"({"kind":"XDot","position":0,"params":{"i":1}})")), ParseError);
  CHECK_THROWS_AS(event_from_json(json::parse(R"({"kind":"XDot","position":0,"params":{"i":1,"create":true,"x":1}})")),
                  ParseError);
  CHECK_THROWS_AS(movie_from_json(json::parse(R"({"degree":2,"start":"g5","events":[]})")), ParseError);
  CHECK_THROWS_AS(chart_from_json(json::parse(R"({"degree":2,"vertices":[{"id":0}],"edges":[]})")), ParseError);
}

TEST_CASE("witness logs") {
  std::vector<MoveInstance> w{{MoveKind::TangleC, 0, 1, {Event::xdot(0, 1, true), Event::xtri(0, 1, false)}, "cap"},
                              {MoveKind::CICommute, 2, 4, {}, ""}};
  const auto text = witness_to_text(w);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(witness_from_text(text) == w);
  CHECK(witness_from_text("").empty());
  CHECK_THROWS_AS(witness_from_text("{\"kind\":\"CII\"}\n"), ParseError);
}

TEST_CASE("files") {
  CHECK_THROWS(read_text_file("/nonexistent/bmw/file.json"));
  const auto m = load_movie(read_text_file(std::string(BMW_TEST_DATA) + "/hook-loop-xmarks.json"));
  CHECK(m.events.size() == 4);
}
