#pragma once

#include <string>
#include <vector>

#include "bmw/chart_graph.hpp"
#include "bmw/chart_moves.hpp"
#include "bmw/movie.hpp"
#include "json.hpp"

namespace bmw {

// Movie files:
//   {"degree": n, "start": "<word>", "events": [{"kind", "position", "params"}]}
// Only the parameters a kind uses appear under "params".
nlohmann::json event_to_json(const Event& e);
Event event_from_json(const nlohmann::json& j);
nlohmann::json movie_to_json(const ChartMovie& m);
ChartMovie movie_from_json(const nlohmann::json& j);
std::string save_movie(const ChartMovie& m);
ChartMovie load_movie(const std::string& text);

nlohmann::json chart_to_json(const ChartGraph& g);
ChartGraph chart_from_json(const nlohmann::json& j);
std::string save_chart(const ChartGraph& g);
ChartGraph load_chart(const std::string& text);

// One JSON object per line: kind, begin, end, replacement, label.
std::string witness_to_text(const std::vector<MoveInstance>& moves);
std::vector<MoveInstance> witness_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bmw
