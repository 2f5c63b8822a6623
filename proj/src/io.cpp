#include "bmw/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bmw {

using nlohmann::json;

namespace {

class Params {
 public:
  Params(const json& j, std::string kind) : j_(j), kind_(std::move(kind)) {
    if (!j_.is_object()) throw ParseError(kind_ + ": params must be an object");
  }

  int integer(const char* name) {
    const auto& v = at(name);
    if (!v.is_number_integer()) throw ParseError(kind_ + ": parameter '" + name + "' must be an integer");
    return v.get<int>();
  }
  bool boolean(const char* name) {
    const auto& v = at(name);
    if (!v.is_boolean()) throw ParseError(kind_ + ": parameter '" + name + "' must be true or false");
    return v.get<bool>();
  }
  std::string text(const char* name) {
    const auto& v = at(name);
    if (!v.is_string()) throw ParseError(kind_ + ": parameter '" + name + "' must be a string");
    return v.get<std::string>();
  }
  void done() const {
    for (const auto& [k, v] : j_.items())
      if (!used_.contains(k)) throw ParseError(kind_ + ": unexpected parameter '" + k + "'");
  }

 private:
  const json& at(const char* name) {
    if (!j_.contains(name)) throw ParseError(kind_ + ": missing parameter '" + name + "'");
    used_.insert(name);
    return j_.at(name);
  }

  const json& j_;
  std::string kind_;
  std::set<std::string> used_;
};

const json& field(const json& j, const char* name, const char* what) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string(what) + ": missing field '" + name + "'");
  return j.at(name);
}

int int_field(const json& j, const char* name, const char* what) {
  const auto& v = field(j, name, what);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": field '" + name + "' must be an integer");
  return v.get<int>();
}

constexpr int kAnyDegree = 1 << 20;

json end_to_json(const EdgeEnd& e) {
  switch (e.kind) {
    case EndKind::Vertex: return {{"vertex", e.id}};
    case EndKind::Bottom: return {{"bottom", e.id}};
    case EndKind::Top: return {{"top", e.id}};
    case EndKind::None: break;
  }
  return nullptr;
}

EdgeEnd end_from_json(const json& j) {
  if (j.is_null()) return {};
  if (!j.is_object() || j.size() != 1) throw ParseError("edge end must be null or a one-key object");
  const auto& [key, value] = *j.items().begin();
  if (!value.is_number_integer()) throw ParseError("edge end id must be an integer");
  const int id = value.get<int>();
  if (key == "vertex") return {EndKind::Vertex, id};
  if (key == "bottom") return {EndKind::Bottom, id};
  if (key == "top") return {EndKind::Top, id};
  throw ParseError("unknown edge end '" + key + "'");
}

std::string orientation_name(EdgeOrientation o) {
  switch (o) {
    case EdgeOrientation::Forward: return "forward";
    case EdgeOrientation::Backward: return "backward";
    case EdgeOrientation::None: break;
  }
  return "none";
}

}  // namespace

json event_to_json(const Event& e) {
  json p = json::object();
  switch (e.kind) {
    case EventKind::BlackG: p = {{"i", e.i}, {"eps", e.eps}, {"create", e.forward}}; break;
    case EventKind::XDot: p = {{"i", e.i}, {"create", e.forward}}; break;
    case EventKind::Saddle: p = {{"i", e.i}, {"eps", e.eps}, {"forward", e.forward}}; break;
    case EventKind::GCap:
    case EventKind::GCup: p = {{"i", e.i}, {"eps", e.eps}}; break;
    case EventKind::ECap:
    case EventKind::ECup: p = {{"i", e.i}}; break;
    case EventKind::White:
      p = {{"i", e.i}, {"j", e.j}, {"variant", e.variant}, {"eps", e.eps}, {"forward", e.forward}};
      break;
    case EventKind::Crossing: p = {{"left", to_string(e.a)}, {"right", to_string(e.b)}}; break;
    case EventKind::Square8: p = {{"i", e.i}, {"j", e.j}, {"forward", e.forward}}; break;
    case EventKind::Square5:
      p = {{"variant", e.variant}, {"i", e.i}, {"j", e.j}, {"eps", e.eps}, {"forward", e.forward}};
      break;
    case EventKind::XTri: p = {{"i", e.i}, {"merge", e.forward}}; break;
    case EventKind::Branch:
      p = {{"i", e.i},
           {"eps", e.eps},
           {"side", e.side == BranchSide::Left ? "left" : "right"},
           {"forward", e.forward}};
      break;
    case EventKind::Square6:
      p = {{"i", e.i}, {"j", e.j}, {"eps", e.eps}, {"delta", e.delta}, {"forward", e.forward}};
      break;
    case EventKind::XStar: p = {{"i", e.i}, {"below", e.below}, {"above", e.above}}; break;
    case EventKind::SquareStar:
      p = {{"i", e.i}, {"left", e.left}, {"right", e.right}, {"forward", e.forward}};
      break;
    case EventKind::Level: break;
  }
  return {{"kind", to_string(e.kind)}, {"position", e.position}, {"params", p}};
}

Event event_from_json(const json& j) {
  const auto& kind_j = field(j, "kind", "event");
  if (!kind_j.is_string()) throw ParseError("event: 'kind' must be a string");
  const auto kind = parse_event_kind(kind_j.get<std::string>());
  if (!kind) throw ParseError("event: unknown kind '" + kind_j.get<std::string>() + "'");
  const int pos = int_field(j, "position", "event");
  if (pos < 0) throw ParseError("event: negative position");
  for (const auto& [k, v] : j.items())
    if (k != "kind" && k != "position" && k != "params") throw ParseError("event: unexpected field '" + k + "'");
  static const json empty = json::object();
  Params p(j.contains("params") ? j.at("params") : empty, to_string(*kind));
  const auto at = static_cast<std::size_t>(pos);
  Event e;
  switch (*kind) {
    case EventKind::BlackG: {
      const int i = p.integer("i"), eps = p.integer("eps");
      e = Event::black(at, i, eps, p.boolean("create"));
      break;
    }
    case EventKind::XDot: {
      const int i = p.integer("i");
      e = Event::xdot(at, i, p.boolean("create"));
      break;
    }
    case EventKind::Saddle: {
      const int i = p.integer("i"), eps = p.integer("eps");
      e = Event::saddle(at, i, eps, p.boolean("forward"));
      break;
    }
    case EventKind::GCap:
    case EventKind::GCup: {
      const int i = p.integer("i"), eps = p.integer("eps");
      e = *kind == EventKind::GCap ? Event::gcap(at, i, eps) : Event::gcup(at, i, eps);
      break;
    }
    case EventKind::ECap:
    case EventKind::ECup: {
      const int i = p.integer("i");
      e = *kind == EventKind::ECap ? Event::ecap(at, i) : Event::ecup(at, i);
      break;
    }
    case EventKind::White: {
      const int i = p.integer("i"), jj = p.integer("j"), v = p.integer("variant"), eps = p.integer("eps");
      e = Event::white(at, i, jj, v, eps, p.boolean("forward"));
      if (e.eps != eps) throw ParseError("White: variant 5 requires eps 1");
      break;
    }
    case EventKind::Crossing: {
      try {
        const auto l = parse_letter(p.text("left"), kAnyDegree);
        const auto r = parse_letter(p.text("right"), kAnyDegree);
        e = Event::crossing(at, l, r);
      } catch (const RewriteError& err) {
        throw ParseError(std::string("Crossing: ") + err.what());
      }
      break;
    }
    case EventKind::Square8: {
      const int i = p.integer("i"), jj = p.integer("j");
      e = Event::square8(at, i, jj, p.boolean("forward"));
      break;
    }
    case EventKind::Square5: {
      const int v = p.integer("variant"), i = p.integer("i"), jj = p.integer("j"), eps = p.integer("eps");
      e = Event::square5(at, v, i, jj, eps, p.boolean("forward"));
      break;
    }
    case EventKind::XTri: {
      const int i = p.integer("i");
      e = Event::xtri(at, i, p.boolean("merge"));
      break;
    }
    case EventKind::Branch: {
      const int i = p.integer("i"), eps = p.integer("eps");
      const auto side = p.text("side");
      if (side != "left" && side != "right") throw ParseError("Branch: side must be 'left' or 'right'");
      e = Event::branch(at, i, eps, side == "left" ? BranchSide::Left : BranchSide::Right, p.boolean("forward"));
      break;
    }
    case EventKind::Square6: {
      const int i = p.integer("i"), jj = p.integer("j"), eps = p.integer("eps"), d = p.integer("delta");
      e = Event::square6(at, i, jj, eps, d, p.boolean("forward"));
      break;
    }
    case EventKind::XStar: {
      const int i = p.integer("i"), below = p.integer("below"), above = p.integer("above");
      e = Event::xstar(at, i, below, above);
      break;
    }
    case EventKind::SquareStar: {
      const int i = p.integer("i"), l = p.integer("left"), r = p.integer("right");
      e = Event::square_star(at, i, l, r, p.boolean("forward"));
      break;
    }
    case EventKind::Level:
      e = Event::level();
      e.position = at;
      break;
  }
  p.done();
  return e;
}

json movie_to_json(const ChartMovie& m) {
  json events = json::array();
  for (const auto& e : m.events) events.push_back(event_to_json(e));
  return {{"degree", m.degree}, {"start", word_to_text(m.start)}, {"events", events}};
}

ChartMovie movie_from_json(const json& j) {
  for (const auto& [k, v] : j.items())
    if (k != "degree" && k != "start" && k != "events") throw ParseError("movie: unexpected field '" + k + "'");
  ChartMovie m;
  m.degree = int_field(j, "degree", "movie");
  if (m.degree < 1) throw ParseError("movie: degree must be positive");
  const auto& start = field(j, "start", "movie");
  if (!start.is_string()) throw ParseError("movie: 'start' must be a word string");
  try {
    m.start = parse_word(start.get<std::string>(), m.degree);
  } catch (const RewriteError& e) {
    throw ParseError(std::string("movie start: ") + e.what());
  }
  const auto& events = field(j, "events", "movie");
  if (!events.is_array()) throw ParseError("movie: 'events' must be an array");
  for (std::size_t k = 0; k < events.size(); ++k) {
    try {
      m.events.push_back(event_from_json(events[k]));
    } catch (const ParseError& e) {
      throw ParseError("event " + std::to_string(k) + ": " + e.what());
    }
  }
  return m;
}

std::string save_movie(const ChartMovie& m) { return movie_to_json(m).dump(2) + "\n"; }

ChartMovie load_movie(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("movie: ") + e.what());
  }
  return movie_from_json(j);
}

json chart_to_json(const ChartGraph& g) {
  json vertices = json::array(), edges = json::array();
  for (const auto& v : g.vertices) {
    json jv = {{"id", v.id}, {"type", v.type}};
    if (v.pos) jv["x"] = v.pos->x, jv["y"] = v.pos->y;
    vertices.push_back(jv);
  }
  for (const auto& e : g.edges) {
    json pts = json::array();
    for (const auto& p : e.points) pts.push_back({p.x, p.y});
    edges.push_back({{"id", e.id},
                     {"label", std::string(1, e.label)},
                     {"index", e.index},
                     {"orientation", orientation_name(e.orientation)},
                     {"from", end_to_json(e.from)},
                     {"to", end_to_json(e.to)},
                     {"points", pts}});
  }
  return {{"degree", g.degree}, {"vertices", vertices}, {"edges", edges}};
}

ChartGraph chart_from_json(const json& j) {
  ChartGraph g;
  g.degree = int_field(j, "degree", "chart");
  const auto& vs = field(j, "vertices", "chart");
  const auto& es = field(j, "edges", "chart");
  if (!vs.is_array() || !es.is_array()) throw ParseError("chart: vertices and edges must be arrays");
  for (const auto& jv : vs) {
    ChartVertex v;
    v.id = int_field(jv, "id", "vertex");
    const auto& t = field(jv, "type", "vertex");
    if (!t.is_string()) throw ParseError("vertex: 'type' must be a string");
    v.type = t.get<std::string>();
    if (jv.contains("x") != jv.contains("y")) throw ParseError("vertex: give both x and y or neither");
    if (jv.contains("x")) {
      if (!jv["x"].is_number() || !jv["y"].is_number()) throw ParseError("vertex: coordinates must be numbers");
      v.pos = Point{jv["x"].get<double>(), jv["y"].get<double>()};
    }
    g.vertices.push_back(v);
  }
  for (const auto& je : es) {
    ChartEdge e;
    e.id = int_field(je, "id", "edge");
    const auto& label = field(je, "label", "edge");
    if (!label.is_string() || (label != "g" && label != "e")) throw ParseError("edge: label must be \"g\" or \"e\"");
    e.label = label.get<std::string>()[0];
    e.index = int_field(je, "index", "edge");
    const std::string o = je.value("orientation", e.label == 'e' ? "none" : "");
    if (o == "forward") e.orientation = EdgeOrientation::Forward;
    else if (o == "backward") e.orientation = EdgeOrientation::Backward;
    else if (o == "none") e.orientation = EdgeOrientation::None;
    else throw ParseError("edge " + std::to_string(e.id) + ": orientation must be forward, backward or none");
    e.from = end_from_json(je.value("from", json(nullptr)));
    e.to = end_from_json(je.value("to", json(nullptr)));
    if (je.contains("points")) {
      for (const auto& p : je["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
          throw ParseError("edge " + std::to_string(e.id) + ": points must be [x, y] pairs");
        e.points.push_back({p[0].get<double>(), p[1].get<double>()});
      }
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

std::string save_chart(const ChartGraph& g) { return chart_to_json(g).dump(2) + "\n"; }

ChartGraph load_chart(const std::string& text) {
  try {
    return chart_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("chart: ") + e.what());
  }
}

std::string witness_to_text(const std::vector<MoveInstance>& moves) {
  std::string out;
  for (const auto& m : moves) {
    json repl = json::array();
    for (const auto& e : m.replacement) repl.push_back(event_to_json(e));
    json line = {{"kind", to_string(m.kind)}, {"begin", m.begin}, {"end", m.end}, {"replacement", repl},
                 {"label", m.label}};
    out += line.dump() + "\n";
  }
  return out;
}

std::vector<MoveInstance> witness_from_text(const std::string& text) {
  std::vector<MoveInstance> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      MoveInstance m;
      const auto kind = parse_move_kind(field(j, "kind", "move").get<std::string>());
      if (!kind) throw ParseError("unknown move kind");
      m.kind = *kind;
      m.begin = static_cast<std::size_t>(int_field(j, "begin", "move"));
      m.end = static_cast<std::size_t>(int_field(j, "end", "move"));
      for (const auto& e : field(j, "replacement", "move")) m.replacement.push_back(event_from_json(e));
      m.label = j.value("label", "");
      out.push_back(std::move(m));
    } catch (const std::exception& e) {
      throw ParseError("witness line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

}  // namespace bmw
