#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmw/movie.hpp"

namespace bmw {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class EndKind { None, Vertex, Bottom, Top };

// Where an edge ends: a vertex id, a boundary slot (left to right), or
// nothing for a closed loop.
struct EdgeEnd {
  EndKind kind = EndKind::None;
  int id = -1;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

// Orientation of a g-edge relative to its polyline (from -> to).
enum class EdgeOrientation { None, Forward, Backward };

struct ChartVertex {
  int id = 0;
  std::string type;  // "a".."k", "i'", "j'"
  std::optional<Point> pos;
  friend bool operator==(const ChartVertex&, const ChartVertex&) = default;
};

struct ChartEdge {
  int id = 0;
  char label = 'g';  // 'g' or 'e'
  int index = 1;
  EdgeOrientation orientation = EdgeOrientation::None;
  EdgeEnd from;
  EdgeEnd to;
  // Full polyline including both end points; empty means a straight segment.
  // A closed loop repeats its first point at the end.
  std::vector<Point> points;
  friend bool operator==(const ChartEdge&, const ChartEdge&) = default;
};

struct ChartGraph {
  int degree = 1;
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;
  friend bool operator==(const ChartGraph&, const ChartGraph&) = default;
};

struct GraphOptions {
  bool allow_e_caps = false;
};

ChartGraph movie_to_chart_graph(const ChartMovie& m, GraphOptions options = {});

// Sweeps the chart bottom to top; vertices at equal height are ordered by id.
// The result may contain ECap/ECup events.
ChartMovie chart_graph_to_movie(const ChartGraph& g);

// Fills in missing vertex positions by layering along from -> to.
ChartGraph with_layout(const ChartGraph& g);

// One edge-end around a vertex.
struct IncidentEnd {
  int edge = 0;
  bool at_from = true;
  char label = 'g';
  int index = 1;
  int flow = 0;  // +1 toward the vertex, -1 away, 0 for e-edges
};

// Edge-ends around a vertex in clockwise order.
std::vector<IncidentEnd> clockwise_ends(const ChartGraph& g, int vertex_id);

struct ChartIssue {
  std::optional<int> vertex;
  std::string clause;
  std::string message;
};

struct ChartReport {
  bool valid = true;
  std::vector<ChartIssue> issues;
};

// Local conditions at each vertex, then sweep consistency.
ChartReport validate_chart_graph(const ChartGraph& g);
std::string to_string(const ChartReport& r);

std::size_t count_vertices(const ChartGraph& g, const std::string& type);
// Number of edge-ends at a vertex.
std::size_t vertex_degree(const ChartGraph& g, int vertex_id);

}  // namespace bmw
