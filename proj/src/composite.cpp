#include <cstdlib>
#include <numeric>

#include "bmw/movie.hpp"

namespace bmw {

namespace {

std::vector<Event> reversed_inverse(const std::vector<Event>& seq) {
  std::vector<Event> out;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Nodes: bottom leaves [0, below), top leaves [below, below+above), then one
// node per XTri. Every segment joins the node that opened it to the node that
// closes it; the resolution is a tree iff no union closes a cycle.
bool is_tree(int below, int above, const std::vector<Event>& seq) {
  UnionFind uf(static_cast<std::size_t>(below + above) + seq.size());
  std::vector<int> open;
  for (int k = 0; k < below; ++k) open.push_back(k);
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const int node = below + above + static_cast<int>(s);
    const auto p = static_cast<std::ptrdiff_t>(seq[s].position);
    if (seq[s].forward) {
      if (!uf.unite(open[p], node) || !uf.unite(open[p + 1], node)) return false;
      open.erase(open.begin() + p + 1);
      open[p] = node;
    } else {
      if (!uf.unite(open[p], node)) return false;
      open[p] = node;
      open.insert(open.begin() + p + 1, node);
    }
  }
  for (int k = 0; k < above; ++k)
    if (!uf.unite(open[k], below + k)) return false;
  return true;
}

void resolutions(int i, int count, int merges, int splits, std::vector<Event>& prefix,
                 std::vector<std::vector<Event>>& out) {
  if (merges == 0 && splits == 0) {
    out.push_back(prefix);
    return;
  }
  if (merges > 0)
    for (int p = 0; p + 1 < count; ++p) {
      prefix.push_back(Event::xtri(static_cast<std::size_t>(p), i, true));
      resolutions(i, count - 1, merges - 1, splits, prefix, out);
      prefix.pop_back();
    }
  if (splits > 0)
    for (int p = 0; p < count; ++p) {
      prefix.push_back(Event::xtri(static_cast<std::size_t>(p), i, false));
      resolutions(i, count + 1, merges, splits - 1, prefix, out);
      prefix.pop_back();
    }
}

Event event_from_step(const ScriptStep& s, std::size_t base) {
  const std::size_t pos = base + s.position;
  if (s.rule.tag == RuleTag::R4)
    return s.direction == Direction::Backward ? Event::gcap(pos, s.rule.i, s.rule.eps)
                                              : Event::gcup(pos, s.rule.i, s.rule.eps);
  if (s.rule.tag == RuleTag::R5)
    return Event::white(pos, s.rule.i, s.rule.j, 5, 1, s.direction == Direction::Forward);
  throw RewriteError("unexpected step " + to_string(s.rule) + " in a braid rotation");
}

}  // namespace

std::vector<Event> expand_event(const Event& e) {
  switch (e.kind) {
    case EventKind::XStar: {
      event_rewrite(e, e.i + 1);
      std::vector<Event> out;
      for (int k = 1; k < e.below; ++k) out.push_back(Event::xtri(e.position, e.i, true));
      for (int k = 1; k < e.above; ++k) out.push_back(Event::xtri(e.position, e.i, false));
      return out;
    }
    case EventKind::SquareStar: {
      event_rewrite(e, e.i + 1);
      std::vector<Event> out;
      const int nl = std::abs(e.left), nr = std::abs(e.right);
      for (int t = 0; t < nl; ++t)
        out.push_back(Event::branch(e.position + static_cast<std::size_t>(t), e.i, e.left > 0 ? 1 : -1,
                                    BranchSide::Left, true));
      for (int t = 0; t < nr; ++t)
        out.push_back(Event::branch(e.position + static_cast<std::size_t>(nl), e.i, e.right > 0 ? 1 : -1,
                                    BranchSide::Right, true));
      return e.forward ? out : reversed_inverse(out);
    }
    case EventKind::Square6: {
      std::vector<Event> out{Event::square5(e.position, 6, e.i, e.j, e.eps, true),
                             Event::square5(e.position, 7, e.j, e.i, e.delta, false)};
      return e.forward ? out : reversed_inverse(out);
    }
    default:
      return {e};
  }
}

ChartMovie expand_composite_vertices(const ChartMovie& m) {
  ChartMovie out{m.degree, m.start, {}};
  for (const auto& e : m.events)
    for (const auto& x : expand_event(e)) out.events.push_back(x);
  return out;
}

std::vector<std::vector<Event>> xstar_tree_expansions(const Event& xstar) {
  if (xstar.kind != EventKind::XStar) throw RewriteError("not an XStar event");
  event_rewrite(xstar, xstar.i + 1);
  std::vector<std::vector<Event>> all;
  std::vector<Event> prefix;
  resolutions(xstar.i, xstar.below, xstar.below - 1, xstar.above - 1, prefix, all);
  std::vector<std::vector<Event>> out;
  for (auto& seq : all) {
    if (!is_tree(xstar.below, xstar.above, seq)) continue;
    for (auto& ev : seq) ev.position += xstar.position;
    out.push_back(std::move(seq));
  }
  return out;
}

ChartMovie canonicalize_white_rotations(const ChartMovie& m) {
  ChartMovie out{m.degree, m.start, {}};
  for (const auto& e : m.events) {
    if (e.kind != EventKind::White || e.variant == 5) {
      out.events.push_back(e);
      continue;
    }
    const RuleTag tag = e.variant == 15 ? RuleTag::D15 : e.variant == 16 ? RuleTag::D16 : RuleTag::D17;
    std::vector<Event> seq;
    for (const auto& s : expand_derived_rule(RuleId{tag, e.i, e.j, e.eps, 1, 0}, m.degree).steps)
      seq.push_back(event_from_step(s, e.position));
    if (!e.forward) seq = reversed_inverse(seq);
    out.events.insert(out.events.end(), seq.begin(), seq.end());
  }
  return out;
}

}  // namespace bmw
