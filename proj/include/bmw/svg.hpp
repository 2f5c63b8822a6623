#pragma once

#include <string>

#include "bmw/chart_graph.hpp"
#include "bmw/movie.hpp"

namespace bmw {

enum class RenderTarget { Chart, MovieStrip };

struct RenderSpec {
  RenderTarget target = RenderTarget::Chart;
  double width = 480;   // chart page, or one strip panel
  double height = 480;
  double margin = 24;
  double stroke = 1.5;
  double font_size = 10;
  bool labels = true;   // edge labels at polyline midpoints
  std::string g_color = "#000000";
  std::string e_color = "#1f5fbf";
};

std::string render_chart_svg(const ChartGraph& g, const RenderSpec& spec = {});
std::string render_movie_svg(const ChartMovie& m, const RenderSpec& spec = {});
// Dispatches on spec.target; charts are derived from the movie (e-caps allowed).
std::string render_svg(const ChartMovie& m, const RenderSpec& spec = {});

}  // namespace bmw
