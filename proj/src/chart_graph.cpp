#include "bmw/chart_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace bmw {

namespace {

struct EdgeBuf {
  char label = 'g';
  int index = 1;
  EdgeOrientation orientation = EdgeOrientation::None;
  EdgeEnd from, to;
  std::deque<Point> pts;
  bool alive = true;
};

struct Handle {
  int edge = -1;
  bool at_back = true;
};

EdgeOrientation upward_orientation(const Letter& l) {
  if (l.is_hook()) return EdgeOrientation::None;
  return l.sign() > 0 ? EdgeOrientation::Forward : EdgeOrientation::Backward;
}

EdgeOrientation flipped(EdgeOrientation o) {
  if (o == EdgeOrientation::Forward) return EdgeOrientation::Backward;
  if (o == EdgeOrientation::Backward) return EdgeOrientation::Forward;
  return o;
}

class GraphBuilder {
 public:
  GraphBuilder(const ChartMovie& m, std::vector<Word> slices) : m_(m), slices_(std::move(slices)) {
    std::size_t maxlen = 1;
    for (const auto& w : slices_) maxlen = std::max(maxlen, w.size());
    h_ = 1.0 / static_cast<double>(maxlen + 1);
    levels_ = static_cast<double>(m.events.size() + 1);
  }

  ChartGraph build() {
    const Word& first = slices_.front();
    for (std::size_t idx = 0; idx < first.size(); ++idx) {
      EdgeBuf e;
      set_letter(e, first[idx], true);
      e.from = {EndKind::Bottom, static_cast<int>(idx)};
      e.pts = {{x(idx), 0.0}, {x(idx), mid(0)}};
      cur_.push_back({add(std::move(e)), true});
    }
    for (std::size_t k = 0; k < m_.events.size(); ++k) step(k);
    const Word& last = slices_.back();
    for (std::size_t idx = 0; idx < last.size(); ++idx) {
      auto& hd = cur_[idx];
      push(hd, {x(idx), 1.0});
      end_of(hd) = {EndKind::Top, static_cast<int>(idx)};
    }
    return finish();
  }

 private:
  double x(std::size_t idx) const { return h_ * static_cast<double>(idx + 1); }
  double mid(std::size_t k) const { return (static_cast<double>(k) + 0.5) / levels_; }
  double level(std::size_t k) const { return (static_cast<double>(k) + 1.0) / levels_; }

  int add(EdgeBuf e) {
    edges_.push_back(std::move(e));
    return static_cast<int>(edges_.size()) - 1;
  }

  static void set_letter(EdgeBuf& e, const Letter& l, bool upward) {
    e.label = l.is_hook() ? 'e' : 'g';
    e.index = l.index;
    e.orientation = upward ? upward_orientation(l) : flipped(upward_orientation(l));
  }

  void push(const Handle& hd, Point p) {
    auto& pts = edges_[hd.edge].pts;
    if (hd.at_back)
      pts.push_back(p);
    else
      pts.push_front(p);
  }

  EdgeEnd& end_of(const Handle& hd) { return hd.at_back ? edges_[hd.edge].to : edges_[hd.edge].from; }

  void reverse(int edge, std::vector<Handle>& live) {
    auto& e = edges_[edge];
    std::reverse(e.pts.begin(), e.pts.end());
    std::swap(e.from, e.to);
    e.orientation = flipped(e.orientation);
    for (auto& hd : live)
      if (hd.edge == edge) hd.at_back = !hd.at_back;
  }

  void step(std::size_t k) {
    const Event& ev = m_.events[k];
    const Word& before = slices_[k];
    const Word& after = slices_[k + 1];
    const auto rw = event_rewrite(ev, m_.degree);
    const std::size_t p = ev.position, a = rw.source.size(), b = rw.target.size();

    // Handles of the next slice; consumed letters are not carried over.
    std::vector<Handle> next(after.size());
    std::vector<bool> carried(after.size(), false);
    for (std::size_t idx = 0; idx < before.size(); ++idx) {
      if (idx >= p && idx < p + a) continue;
      const std::size_t to = idx < p ? idx : idx - a + b;
      next[to] = cur_[idx];
      carried[to] = true;
    }

    const double y = level(k);
    switch (ev.kind) {
      case EventKind::Level:
        break;
      case EventKind::GCap:
      case EventKind::ECap: {
        EdgeBuf e;
        set_letter(e, after[p], false);
        e.pts = {{x(p), mid(k + 1)}, {(x(p) + x(p + 1)) / 2, y}, {x(p + 1), mid(k + 1)}};
        const int id = add(std::move(e));
        next[p] = {id, false};
        next[p + 1] = {id, true};
        break;
      }
      case EventKind::GCup:
      case EventKind::ECup: {
        Handle hl = cur_[p], hr = cur_[p + 1];
        const Point xm{(x(p) + x(p + 1)) / 2, y};
        if (hl.edge == hr.edge) {
          auto& e = edges_[hl.edge];
          if (hl.at_back) std::swap(hl, hr);
          e.pts.push_back(xm);
          e.pts.push_back(e.pts.front());
          e.from = e.to = EdgeEnd{};
          break;
        }
        std::vector<Handle> live = next;
        live.push_back(hl);
        live.push_back(hr);
        if (!live[live.size() - 2].at_back) reverse(hl.edge, live);
        if (live.back().at_back) reverse(hr.edge, live);
        live.pop_back();
        live.pop_back();
        auto& A = edges_[hl.edge];
        auto& B = edges_[hr.edge];
        A.pts.push_back(xm);
        A.pts.insert(A.pts.end(), B.pts.begin(), B.pts.end());
        A.to = B.to;
        B.alive = false;
        for (auto& hd : live)
          if (hd.edge == hr.edge) hd.edge = hl.edge;
        next = live;
        break;
      }
      default: {
        double sx = 0;
        for (std::size_t t = 0; t < a; ++t) sx += x(p + t);
        for (std::size_t t = 0; t < b; ++t) sx += x(p + t);
        const Point v{sx / static_cast<double>(a + b), y};
        ChartVertex vert;
        vert.id = static_cast<int>(vertices_.size());
        vert.type = vertex_type_of(ev.kind, ev.kind == EventKind::Crossing && (ev.a.is_hook() || ev.b.is_hook()));
        vert.pos = v;
        vertices_.push_back(vert);
        for (std::size_t t = 0; t < a; ++t) {
          push(cur_[p + t], v);
          end_of(cur_[p + t]) = {EndKind::Vertex, vert.id};
        }
        for (std::size_t t = 0; t < b; ++t) {
          EdgeBuf e;
          set_letter(e, after[p + t], true);
          e.from = {EndKind::Vertex, vert.id};
          e.pts = {v, {x(p + t), mid(k + 1)}};
          next[p + t] = {add(std::move(e)), true};
        }
        break;
      }
    }
    for (std::size_t idx = 0; idx < after.size(); ++idx)
      if (carried[idx]) push(next[idx], {x(idx), mid(k + 1)});
    cur_ = std::move(next);
  }

  ChartGraph finish() {
    ChartGraph g;
    g.degree = m_.degree;
    g.vertices = vertices_;
    for (const auto& e : edges_) {
      if (!e.alive) continue;
      ChartEdge out;
      out.id = static_cast<int>(g.edges.size());
      out.label = e.label;
      out.index = e.index;
      out.orientation = e.orientation;
      out.from = e.from;
      out.to = e.to;
      out.points.assign(e.pts.begin(), e.pts.end());
      g.edges.push_back(std::move(out));
    }
    return g;
  }

  const ChartMovie& m_;
  std::vector<Word> slices_;
  double h_ = 0.5;
  double levels_ = 1;
  std::vector<EdgeBuf> edges_;
  std::vector<ChartVertex> vertices_;
  std::vector<Handle> cur_;
};

std::string clause_name(const std::string& type) {
  static const std::map<std::string, std::string> names = {
      {"a", "(a) black vertex"},          {"b", "(b) crossing"},
      {"c", "(c) white vertex"},          {"d", "(d) x-mark of degree 1"},
      {"e", "(e) x-mark of degree 2"},    {"f", "(f) crossing"},
      {"g", "(g) square of degree 4"},    {"h", "(h) square of degree 5"},
      {"i", "(i) x-mark of degree 3"},    {"j", "(j) square of degree 3"},
      {"k", "(k) square of degree 6"},    {"i'", "(i') x-mark of degree m"},
      {"j'", "(j') square of degree m"}};
  auto it = names.find(type);
  return it == names.end() ? "unknown vertex type '" + type + "'" : it->second;
}

std::size_t slot_count(const ChartGraph& g, EndKind side) {
  std::size_t n = 0;
  for (const auto& e : g.edges) n += (e.from.kind == side) + (e.to.kind == side);
  return n;
}

const ChartVertex* find_vertex(const ChartGraph& g, int id) {
  for (const auto& v : g.vertices)
    if (v.id == id) return &v;
  return nullptr;
}

Point end_position(const ChartGraph& g, const EdgeEnd& end) {
  switch (end.kind) {
    case EndKind::Vertex: {
      const auto* v = find_vertex(g, end.id);
      if (!v || !v->pos) throw ValidationError("vertex " + std::to_string(end.id) + " has no position");
      return *v->pos;
    }
    case EndKind::Bottom:
    case EndKind::Top: {
      const double n = static_cast<double>(slot_count(g, end.kind));
      return {static_cast<double>(end.id + 1) / (n + 1), end.kind == EndKind::Bottom ? 0.0 : 1.0};
    }
    case EndKind::None: break;
  }
  throw ValidationError("closed edge without polyline");
}

// Checks on one vertex given its clockwise edge-ends.
class LocalCheck {
 public:
  LocalCheck(const ChartVertex& v, std::vector<IncidentEnd> ends, std::vector<ChartIssue>& out)
      : v_(v), e_(std::move(ends)), out_(out) {}

  void run() {
    const auto& t = v_.type;
    const std::size_t d = e_.size();
    if (t == "a") {
      degree(1) && labels("g", 1);
    } else if (t == "d") {
      degree(1) && labels("e", 1);
    } else if (t == "e") {
      if (!degree(2)) return;
      if (count('g') != 1 || count('e') != 1) fail("needs one g-edge and one e-edge");
      else same_index();
    } else if (t == "b" || t == "f") {
      crossing(t == "f");
    } else if (t == "c") {
      white();
    } else if (t == "g") {
      if (degree(4) && all('e')) {
        std::map<int, int> c;
        for (const auto& x : e_) ++c[x.index];
        bool ok = c.size() == 2;
        if (ok) {
          auto it = c.begin();
          auto jt = std::next(it);
          ok = std::abs(it->first - jt->first) == 1 && ((it->second == 3) != (jt->second == 3));
        }
        if (!ok) fail("needs three e_i edges and one e_j edge with |i-j|=1");
      }
    } else if (t == "h") {
      square5();
    } else if (t == "i") {
      degree(3) && all('e') && same_index();
    } else if (t == "j") {
      if (!degree(3)) return;
      if (count('e') != 2 || count('g') != 1) fail("needs two e-edges and one g-edge");
      else same_index();
    } else if (t == "k") {
      square6();
    } else if (t == "i'") {
      if (d < 3) fail("degree " + std::to_string(d) + " must exceed 2");
      else all('e') && same_index();
    } else if (t == "j'") {
      if (d < 3) fail("degree " + std::to_string(d) + " must exceed 2");
      else if (count('e') != 2) fail("needs exactly two e-edges");
      else same_index();
    } else {
      fail("unknown vertex type");
    }
  }

 private:
  void fail(const std::string& msg) { out_.push_back({v_.id, clause_name(v_.type), msg}); }

  const IncidentEnd& at(std::size_t k) const { return e_[k % e_.size()]; }

  bool degree(std::size_t d) {
    if (e_.size() == d) return true;
    fail("has degree " + std::to_string(e_.size()) + ", expected " + std::to_string(d));
    return false;
  }
  std::size_t count(char label) const {
    return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [&](auto& x) { return x.label == label; }));
  }
  bool all(char label) {
    if (count(label) == e_.size()) return true;
    fail(std::string("every edge must be labeled ") + label + "_i");
    return false;
  }
  bool labels(const char* l, std::size_t n) {
    if (count(l[0]) == n) return true;
    fail(std::string("edge must be labeled ") + l + "_i");
    return false;
  }
  bool same_index() {
    for (const auto& x : e_)
      if (x.index != e_[0].index) {
        fail("edge indices differ");
        return false;
      }
    return true;
  }

  void crossing(bool hooks) {
    if (!degree(4)) return;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto &p = at(k), &q = at(k + 2);
      if (p.label != q.label || p.index != q.index) return fail("diagonal edges carry different labels");
      if (p.label == 'g' && p.flow + q.flow != 0) return fail("diagonal g-edges are not coherently oriented");
    }
    if (std::abs(at(0).index - at(1).index) <= 1) return fail("labels violate |i-j|>1");
    const bool has_hook = count('e') > 0;
    if (hooks && !has_hook) fail("needs at least one pair of e-edges");
    if (!hooks && has_hook) fail("every edge must be labeled g_i");
  }

  void white() {
    if (!degree(6) || !all('g')) return;
    for (std::size_t k = 0; k < 6; ++k)
      if (at(k).index != at(k + 2).index) return fail("labels do not alternate g_i, g_j");
    if (std::abs(at(0).index - at(1).index) != 1) return fail("labels violate |i-j|=1");
    for (std::size_t r = 0; r < 6; ++r) {
      bool ok = true;
      for (std::size_t k = 0; k < 6; ++k) ok = ok && at(r + k).flow == (k < 3 ? 1 : -1);
      if (ok) return;
    }
    fail("orientations are not three in, three out consecutively");
  }

  void square5() {
    if (!degree(5)) return;
    for (int dir : {1, -1})
      for (std::size_t r = 0; r < 5; ++r) {
        auto nth = [&](std::size_t k) -> const IncidentEnd& {
          return dir > 0 ? at(r + k) : at(r + 5 - k);
        };
        const int i = nth(0).index, j = nth(1).index;
        if (nth(0).label != 'g' || nth(1).label != 'g' || nth(2).label != 'e' || nth(3).label != 'e' ||
            nth(4).label != 'e')
          continue;
        if (std::abs(i - j) != 1 || nth(2).index != i || nth(3).index != i || nth(4).index != j) continue;
        if (nth(0).flow != nth(1).flow) return fail("g_i and g_j edges are not both in or both out");
        return;
      }
    fail("labels are not g_i, g_j, e_i, e_i, e_j around the vertex");
  }

  void square6() {
    if (!degree(6)) return;
    if (count('e') != 2) return fail("needs exactly two e-edges");
    std::size_t first = 0;
    while (at(first).label != 'e') ++first;
    if (at(first + 3).label != 'e') return fail("e-edges must be opposite");
    std::map<int, int> c;
    for (std::size_t side = 0; side < 2; ++side) {
      const auto &p = at(first + 3 * side + 1), &q = at(first + 3 * side + 2);
      if (std::abs(p.index - q.index) != 1) return fail("consecutive g-edges violate |i-j|=1");
      if (p.flow != q.flow) return fail("consecutive g_i, g_j edges are not both in or both out");
      ++c[p.index], ++c[q.index];
    }
    if (c.size() != 2) return fail("g-edges must carry exactly the labels g_i, g_j");
    for (std::size_t side = 0; side < 2; ++side)
      if (!c.contains(at(first + 3 * side).index)) return fail("e-edge index outside {i, j}");
  }

  const ChartVertex& v_;
  std::vector<IncidentEnd> e_;
  std::vector<ChartIssue>& out_;
};

}  // namespace

// Defined in sweep.cpp.
ChartMovie sweep_chart(const ChartGraph& laid_out);

ChartGraph movie_to_chart_graph(const ChartMovie& m, GraphOptions options) {
  auto slices = movie_slices(m);
  if (!options.allow_e_caps && has_e_caps(m))
    throw ValidationError("movie has e-edge extrema; normalize caps first");
  return GraphBuilder(m, std::move(slices)).build();
}

ChartGraph with_layout(const ChartGraph& g) {
  ChartGraph out = g;
  if (std::all_of(g.vertices.begin(), g.vertices.end(), [](auto& v) { return v.pos.has_value(); })) return out;

  std::map<int, std::size_t> slot;  // vertex id -> position in out.vertices
  for (std::size_t k = 0; k < out.vertices.size(); ++k) slot[out.vertices[k].id] = k;
  std::vector<int> layer(out.vertices.size(), 1);
  for (std::size_t round = 0;; ++round) {
    if (round > out.vertices.size() + 1) throw ValidationError("cannot lay out chart: edges form a directed cycle");
    bool changed = false;
    for (const auto& e : out.edges)
      if (e.from.kind == EndKind::Vertex && e.to.kind == EndKind::Vertex) {
        auto u = slot.at(e.from.id), v = slot.at(e.to.id);
        if (layer[v] < layer[u] + 1) layer[v] = layer[u] + 1, changed = true;
      }
    if (!changed) break;
  }
  const int top = out.vertices.empty() ? 1 : *std::max_element(layer.begin(), layer.end());
  std::vector<std::size_t> order(out.vertices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return layer[a] < layer[b]; });

  for (auto k : order) {
    auto& v = out.vertices[k];
    if (v.pos) continue;
    double sx = 0;
    int n = 0;
    for (const auto& e : out.edges) {
      if (e.to.kind == EndKind::Vertex && e.to.id == v.id) {
        if (e.from.kind == EndKind::Vertex && !out.vertices[slot.at(e.from.id)].pos) continue;
        if (e.from.kind == EndKind::None) continue;
        sx += end_position(out, e.from).x, ++n;
      }
    }
    const double x = n ? sx / n : 0.5;
    v.pos = Point{x + 1e-3 * static_cast<double>(v.id % 7), static_cast<double>(layer[k]) / (top + 1) +
                                                                 1e-4 * static_cast<double>(v.id)};
  }
  return out;
}

std::vector<IncidentEnd> clockwise_ends(const ChartGraph& g, int vertex_id) {
  const auto* v = find_vertex(g, vertex_id);
  if (!v) throw ValidationError("no vertex " + std::to_string(vertex_id));
  if (!v->pos) throw ValidationError("vertex " + std::to_string(vertex_id) + " has no position");
  struct Item {
    double angle;
    IncidentEnd end;
  };
  std::vector<Item> items;
  for (const auto& e : g.edges) {
    for (bool at_from : {true, false}) {
      const auto& end = at_from ? e.from : e.to;
      if (end.kind != EndKind::Vertex || end.id != vertex_id) continue;
      Point nb;
      if (e.points.size() >= 2)
        nb = at_from ? e.points[1] : e.points[e.points.size() - 2];
      else
        nb = end_position(g, at_from ? e.to : e.from);
      IncidentEnd ie{e.id, at_from, e.label, e.index, 0};
      if (e.label == 'g' && e.orientation != EdgeOrientation::None) {
        const bool leaves = (e.orientation == EdgeOrientation::Forward) == at_from;
        ie.flow = leaves ? -1 : 1;
      }
      items.push_back({std::atan2(nb.y - v->pos->y, nb.x - v->pos->x), ie});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](auto& a, auto& b) { return a.angle > b.angle; });
  std::vector<IncidentEnd> out;
  for (auto& it : items) out.push_back(it.end);
  return out;
}

std::size_t vertex_degree(const ChartGraph& g, int vertex_id) {
  std::size_t d = 0;
  for (const auto& e : g.edges) {
    d += e.from.kind == EndKind::Vertex && e.from.id == vertex_id;
    d += e.to.kind == EndKind::Vertex && e.to.id == vertex_id;
  }
  return d;
}

std::size_t count_vertices(const ChartGraph& g, const std::string& type) {
  return static_cast<std::size_t>(
      std::count_if(g.vertices.begin(), g.vertices.end(), [&](auto& v) { return v.type == type; }));
}

ChartReport validate_chart_graph(const ChartGraph& input) {
  ChartReport r;
  auto issue = [&](std::optional<int> v, std::string clause, std::string msg) {
    r.issues.push_back({v, std::move(clause), std::move(msg)});
  };
  const ChartGraph g = [&] {
    try {
      return with_layout(input);
    } catch (const ValidationError& e) {
      issue(std::nullopt, "layout", e.what());
      return input;
    }
  }();

  std::map<int, int> ids;
  for (const auto& v : g.vertices)
    if (ids[v.id]++) issue(v.id, "structure", "duplicate vertex id");
  for (const auto& e : g.edges) {
    const std::string where = "edge " + std::to_string(e.id);
    if (e.label != 'g' && e.label != 'e') issue(std::nullopt, "structure", where + ": label must be g or e");
    if (e.index < 1 || e.index > g.degree - 1) issue(std::nullopt, "structure", where + ": index out of range");
    if (e.label == 'g' && e.orientation == EdgeOrientation::None)
      issue(std::nullopt, "structure", where + ": g-edge needs an orientation");
    if (e.label == 'e' && e.orientation != EdgeOrientation::None)
      issue(std::nullopt, "structure", where + ": e-edge must be unoriented");
    for (const auto* end : {&e.from, &e.to})
      if (end->kind == EndKind::Vertex && !ids.contains(end->id))
        issue(std::nullopt, "structure", where + ": unknown vertex " + std::to_string(end->id));
    if ((e.from.kind == EndKind::None) != (e.to.kind == EndKind::None))
      issue(std::nullopt, "structure", where + ": only one end is free");
    if (e.from.kind == EndKind::None && (e.points.size() < 3 || e.points.front() != e.points.back()))
      issue(std::nullopt, "structure", where + ": closed edge needs a closed polyline");
  }
  if (!r.issues.empty()) {
    r.valid = false;
    return r;
  }
  for (const auto& v : g.vertices) {
    try {
      LocalCheck(v, clockwise_ends(g, v.id), r.issues).run();
    } catch (const ValidationError& e) {
      issue(v.id, clause_name(v.type), e.what());
    }
  }
  if (r.issues.empty()) {
    try {
      sweep_chart(g);
    } catch (const std::runtime_error& e) {
      issue(std::nullopt, "sweep", e.what());
    }
  }
  r.valid = r.issues.empty();
  return r;
}

std::string to_string(const ChartReport& r) {
  std::ostringstream out;
  for (const auto& i : r.issues) {
    if (i.vertex) out << "vertex " << *i.vertex << ' ';
    out << '[' << i.clause << "]: " << i.message << '\n';
  }
  out << (r.valid ? "valid" : "invalid") << '\n';
  return out.str();
}

ChartMovie chart_graph_to_movie(const ChartGraph& g) {
  auto report = validate_chart_graph(g);
  if (!report.valid) {
    const auto& i = report.issues.front();
    throw ValidationError((i.vertex ? "vertex " + std::to_string(*i.vertex) + " " : std::string()) + "[" + i.clause +
                          "]: " + i.message);
  }
  return sweep_chart(with_layout(g));
}

}  // namespace bmw
