#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "bmw/chart_graph.hpp"

namespace bmw {

namespace {

enum class CritKind { Bottom, Vertex, Min, Max, Top };

struct Crit {
  CritKind kind;
  int id = 0;   // vertex id, boundary slot, or edge id for extrema
  int sub = 0;  // polyline index for extrema
  Point at;
  std::vector<int> starting;  // pieces leaving upward
  std::vector<int> ending;    // pieces arriving from below
};

struct Piece {
  int edge = 0;
  std::vector<Point> pts;  // bottom to top
  int bottom = 0, top = 0;
  Letter letter;
};

double x_at(const Piece& p, double y) {
  if (y <= p.pts.front().y) return p.pts.front().x;
  for (std::size_t k = 0; k + 1 < p.pts.size(); ++k) {
    const auto &a = p.pts[k], &b = p.pts[k + 1];
    if (y <= b.y) return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
  }
  return p.pts.back().x;
}

double slope(const Piece& p) {
  const auto &a = p.pts[0], &b = p.pts[1];
  return (b.x - a.x) / (b.y - a.y);
}

Point end_point(const ChartGraph& g, const EdgeEnd& end, const std::map<EndKind, std::size_t>& slots) {
  if (end.kind == EndKind::Vertex) {
    for (const auto& v : g.vertices)
      if (v.id == end.id) return *v.pos;
  }
  const double n = static_cast<double>(slots.at(end.kind));
  return {static_cast<double>(end.id + 1) / (n + 1), end.kind == EndKind::Bottom ? 0.0 : 1.0};
}

std::string where(const Crit& c) {
  switch (c.kind) {
    case CritKind::Vertex: return "vertex " + std::to_string(c.id);
    case CritKind::Min: return "minimum of edge " + std::to_string(c.id);
    case CritKind::Max: return "maximum of edge " + std::to_string(c.id);
    case CritKind::Bottom: return "bottom boundary";
    case CritKind::Top: return "top boundary";
  }
  return "?";
}

bool rewrites(const Event& e, int degree, const std::vector<Letter>& src, const std::vector<Letter>& tgt) {
  try {
    auto rw = event_rewrite(e, degree);
    return rw.source == src && rw.target == tgt;
  } catch (const RewriteError&) {
    return false;
  }
}

std::optional<Event> read_vertex(const std::string& type, std::size_t p, int n, const std::vector<Letter>& src,
                                 const std::vector<Letter>& tgt) {
  std::set<int> idx;
  for (const auto& l : src) idx.insert(l.index);
  for (const auto& l : tgt) idx.insert(l.index);
  std::vector<Event> cand;
  const bool fwds[] = {true, false};
  const int signs[] = {1, -1};
  if (type == "a" || type == "d" || type == "e" || type == "i" || type == "j") {
    for (int i : idx)
      for (int s : signs)
        for (bool f : fwds) {
          if (type == "a") cand.push_back(Event::black(p, i, s, f));
          if (type == "d" && s == 1) cand.push_back(Event::xdot(p, i, f));
          if (type == "e") cand.push_back(Event::saddle(p, i, s, f));
          if (type == "i" && s == 1) cand.push_back(Event::xtri(p, i, f));
          if (type == "j")
            for (auto side : {BranchSide::Left, BranchSide::Right}) cand.push_back(Event::branch(p, i, s, side, f));
        }
  } else if (type == "b" || type == "f") {
    if (src.size() == 2) cand.push_back(Event::crossing(p, src[0], src[1]));
  } else if (type == "c" || type == "g" || type == "h" || type == "k") {
    for (int i : idx)
      for (int j : idx)
        for (int s : signs)
          for (int d : signs)
            for (bool f : fwds) {
              if (type == "c")
                for (int v : {5, 15, 16, 17}) cand.push_back(Event::white(p, i, j, v, s, f));
              if (type == "g" && s == 1 && d == 1) cand.push_back(Event::square8(p, i, j, f));
              if (type == "h" && d == 1)
                for (int v : {6, 7}) cand.push_back(Event::square5(p, v, i, j, s, f));
              if (type == "k") cand.push_back(Event::square6(p, i, j, s, d, f));
            }
  } else if (type == "i'") {
    if (!src.empty() && !tgt.empty())
      cand.push_back(Event::xstar(p, src[0].index, static_cast<int>(src.size()), static_cast<int>(tgt.size())));
  } else if (type == "j'") {
    const bool fwd = src.size() == 1;
    const auto& wide = fwd ? tgt : src;
    auto hook = std::find_if(wide.begin(), wide.end(), [](auto& l) { return l.is_hook(); });
    if (hook != wide.end()) {
      const int l = static_cast<int>(hook - wide.begin());
      const int r = static_cast<int>(wide.end() - hook) - 1;
      const int ls = l ? wide.front().sign() : 1, rs = r ? wide.back().sign() : 1;
      cand.push_back(Event::square_star(p, hook->index, ls * l, rs * r, fwd));
    }
  }
  for (const auto& e : cand)
    if (rewrites(e, n, src, tgt)) return e;
  return std::nullopt;
}

class Sweep {
 public:
  explicit Sweep(const ChartGraph& g) : g_(g) {
    slots_[EndKind::Bottom] = slots_[EndKind::Top] = 0;
    for (const auto& e : g.edges)
      for (const auto* end : {&e.from, &e.to})
        if (end->kind == EndKind::Bottom || end->kind == EndKind::Top) ++slots_[end->kind];
    for (const auto& v : g.vertices) crit_of(CritKind::Vertex, v.id, 0, *v.pos);
    for (const auto& e : g.edges) cut(e);
  }

  ChartMovie run() {
    std::vector<int> order;
    std::vector<int> bottoms, tops;
    for (int c = 0; c < static_cast<int>(crits_.size()); ++c) {
      auto k = crits_[c].kind;
      if (k == CritKind::Bottom) bottoms.push_back(c);
      else if (k == CritKind::Top) tops.push_back(c);
      else order.push_back(c);
    }
    auto key = [&](int c) {
      const auto& x = crits_[c];
      return std::make_tuple(x.at.y, x.kind == CritKind::Vertex ? 0 : 1, x.id, x.sub);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    auto by_slot = [&](int a, int b) { return crits_[a].id < crits_[b].id; };
    std::sort(bottoms.begin(), bottoms.end(), by_slot);
    std::sort(tops.begin(), tops.end(), by_slot);

    std::vector<Letter> start;
    for (std::size_t k = 0; k < bottoms.size(); ++k) {
      const auto& c = crits_[bottoms[k]];
      if (c.id != static_cast<int>(k)) throw ValidationError("bottom boundary slots are not numbered 0.." +
                                                              std::to_string(bottoms.size() - 1));
      active_.push_back(c.starting.at(0));
      start.push_back(pieces_[c.starting[0]].letter);
    }
    check_order(0.0, -1);

    ChartMovie m;
    m.degree = g_.degree;
    try {
      m.start = Word(g_.degree, start);
    } catch (const RewriteError& e) {
      throw ValidationError(std::string("bottom boundary: ") + e.what());
    }
    Word slice = m.start;
    for (int c : order) {
      Event ev = step(c);
      try {
        slice = apply_event(slice, ev);
      } catch (const RewriteError& e) {
        throw ValidationError(where(crits_[c]) + ": " + e.what());
      }
      m.events.push_back(ev);
    }

    if (active_.size() != tops.size()) throw ValidationError("top boundary does not match the final slice");
    for (std::size_t k = 0; k < tops.size(); ++k) {
      const auto& c = crits_[tops[k]];
      if (c.id != static_cast<int>(k) || pieces_[active_[k]].top != tops[k])
        throw ValidationError("top boundary slot " + std::to_string(k) + " is reached out of order");
    }
    return m;
  }

 private:
  int crit_of(CritKind kind, int id, int sub, Point at) {
    auto k = std::make_tuple(static_cast<int>(kind), id, sub);
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    crits_.push_back({kind, id, sub, at, {}, {}});
    return index_[k] = static_cast<int>(crits_.size()) - 1;
  }

  int end_crit(const EdgeEnd& end, Point at) {
    switch (end.kind) {
      case EndKind::Vertex: return crit_of(CritKind::Vertex, end.id, 0, at);
      case EndKind::Bottom: return crit_of(CritKind::Bottom, end.id, 0, at);
      case EndKind::Top: return crit_of(CritKind::Top, end.id, 0, at);
      case EndKind::None: break;
    }
    throw ValidationError("free edge end");
  }

  // Splits an edge into y-monotone pieces at its interior extrema.
  void cut(const ChartEdge& e) {
    std::vector<Point> P = e.points;
    const bool closed = e.from.kind == EndKind::None;
    if (P.empty()) P = {end_point(g_, e.from, slots_), end_point(g_, e.to, slots_)};
    if (closed) {
      P.pop_back();
      auto low = std::min_element(P.begin(), P.end(), [](auto& a, auto& b) { return a.y < b.y; });
      std::rotate(P.begin(), low, P.end());
      P.push_back(P.front());
    }
    const std::string name = "edge " + std::to_string(e.id);
    for (std::size_t k = 0; k + 1 < P.size(); ++k)
      if (P[k].y == P[k + 1].y) throw ValidationError(name + " has a horizontal segment");

    std::vector<std::pair<std::size_t, int>> cuts;  // polyline index, crit
    const int first = closed ? crit_of(CritKind::Min, e.id, 0, P.front()) : end_crit(e.from, P.front());
    cuts.push_back({0, first});
    for (std::size_t k = 1; k + 1 < P.size(); ++k) {
      const bool up_in = P[k].y > P[k - 1].y, up_out = P[k + 1].y > P[k].y;
      if (up_in == up_out) continue;
      cuts.push_back({k, crit_of(up_in ? CritKind::Max : CritKind::Min, e.id, static_cast<int>(k), P[k])});
    }
    cuts.push_back({P.size() - 1, closed ? first : end_crit(e.to, P.back())});

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      Piece piece;
      piece.edge = e.id;
      piece.pts.assign(P.begin() + static_cast<std::ptrdiff_t>(cuts[s].first),
                       P.begin() + static_cast<std::ptrdiff_t>(cuts[s + 1].first) + 1);
      const bool up = piece.pts.back().y > piece.pts.front().y;
      piece.bottom = up ? cuts[s].second : cuts[s + 1].second;
      piece.top = up ? cuts[s + 1].second : cuts[s].second;
      if (!up) std::reverse(piece.pts.begin(), piece.pts.end());
      if (e.label == 'e') {
        piece.letter = Letter::e(e.index);
      } else {
        const bool along = e.orientation == EdgeOrientation::Forward;
        piece.letter = Letter::g(e.index, up == along ? 1 : -1);
      }
      const int id = static_cast<int>(pieces_.size());
      pieces_.push_back(std::move(piece));
      crits_[pieces_[id].bottom].starting.push_back(id);
      crits_[pieces_[id].top].ending.push_back(id);
    }
  }

  // Active pieces must stay strictly left to right; pieces meeting at the
  // current critical point share its x.
  void check_order(double y, int at) {
    double prev = -1e300;
    bool prev_meets = false;
    for (int p : active_) {
      const bool meets = at >= 0 && pieces_[p].top == at;
      const double x = meets ? crits_[at].at.x : x_at(pieces_[p], y);
      if (x < prev || (x == prev && !(meets && prev_meets)))
        throw ValidationError("edges " + std::to_string(pieces_[p].edge) + " cross another edge below y=" +
                              std::to_string(y) + " without a vertex");
      prev = x;
      prev_meets = meets;
    }
  }

  Event step(int ci) {
    const Crit& c = crits_[ci];
    check_order(c.at.y, ci);

    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < active_.size(); ++k)
      if (pieces_[active_[k]].top == ci) idx.push_back(k);
    if (idx.size() != c.ending.size()) throw ValidationError(where(c) + " is reached by an edge out of sweep order");
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (idx[k] != idx[0] + k) throw ValidationError(where(c) + ": incoming edges are separated by another edge");

    std::size_t pos = 0;
    if (!idx.empty()) {
      pos = idx[0];
    } else {
      for (int p : active_) {
        const double x = x_at(pieces_[p], c.at.y);
        if (x == c.at.x) throw ValidationError(where(c) + " lies on edge " + std::to_string(pieces_[p].edge));
        pos += x < c.at.x;
      }
    }

    std::vector<int> out = c.starting;
    std::sort(out.begin(), out.end(), [&](int a, int b) { return slope(pieces_[a]) < slope(pieces_[b]); });
    for (std::size_t k = 1; k < out.size(); ++k)
      if (slope(pieces_[out[k]]) == slope(pieces_[out[k - 1]]))
        throw ValidationError(where(c) + ": outgoing edges leave in the same direction");

    std::vector<Letter> src, tgt;
    for (auto k : idx) src.push_back(pieces_[active_[k]].letter);
    for (int p : out) tgt.push_back(pieces_[p].letter);

    Event ev = read(c, pos, src, tgt);
    active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(pos),
                  active_.begin() + static_cast<std::ptrdiff_t>(pos + idx.size()));
    active_.insert(active_.begin() + static_cast<std::ptrdiff_t>(pos), out.begin(), out.end());
    return ev;
  }

  Event read(const Crit& c, std::size_t pos, const std::vector<Letter>& src, const std::vector<Letter>& tgt) {
    const std::string seen = "'" + letters_to_text(src) + "' -> '" + letters_to_text(tgt) + "'";
    if (c.kind == CritKind::Min || c.kind == CritKind::Max) {
      const auto& pair = c.kind == CritKind::Min ? tgt : src;
      if (pair.size() != 2 || (c.kind == CritKind::Min ? !src.empty() : !tgt.empty()))
        throw ValidationError(where(c) + " is not a simple extremum");
      const Letter& l = pair[0];
      Event e = l.is_hook() ? (c.kind == CritKind::Min ? Event::ecap(pos, l.index) : Event::ecup(pos, l.index))
                            : (c.kind == CritKind::Min ? Event::gcap(pos, l.index, l.sign())
                                                       : Event::gcup(pos, l.index, l.sign()));
      if (!rewrites(e, g_.degree, src, tgt)) throw ValidationError(where(c) + " reads " + seen);
      return e;
    }
    std::string type;
    for (const auto& v : g_.vertices)
      if (v.id == c.id) type = v.type;
    auto e = read_vertex(type, pos, g_.degree, src, tgt);
    if (!e)
      throw ValidationError(where(c) + " (type " + type + ") has no canonical level reading for " + seen +
                            "; rotate the vertex");
    return *e;
  }

  const ChartGraph& g_;
  std::map<EndKind, std::size_t> slots_;
  std::vector<Crit> crits_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::vector<Piece> pieces_;
  std::vector<int> active_;
};

}  // namespace

ChartMovie sweep_chart(const ChartGraph& laid_out) { return Sweep(laid_out).run(); }

}  // namespace bmw
