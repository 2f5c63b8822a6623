#include "bmw/invariants.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "bmw/brauer.hpp"

namespace bmw {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

SurfaceInvariants surface_invariants(const ChartMovie& input) {
  require_valid(input);
  if (has_e_caps(input)) throw ValidationError("movie has e-edge extrema; normalize caps first");
  const ChartMovie m = expand_composite_vertices(input);
  const int n = m.degree;

  SurfaceInvariants s;
  s.interval_components_start = n;
  int disks = 0, bands = 0;
  for (const auto& e : m.events) {
    if (e.kind == EventKind::XTri) ++disks;
    if (e.kind == EventKind::BlackG || e.kind == EventKind::XDot || e.kind == EventKind::Saddle) ++bands;
  }
  s.euler_characteristic = n + disks - bands;

  const Word end = final_word(m);
  const BrauerDiagram t0 = brauer_image(m.start), t1 = brauer_image(end);
  s.circle_components_start = t0.loops();
  s.trivial_boundary = m.start.empty() && end.empty();

  // Node (q, t) for boundary point q in [0, 2n) of the slice at t in {0, 1}.
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto node = [n](int q, int t) { return q + 2 * n * t; };
  auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
  for (int q = 0; q < 2 * n; ++q) {
    unite(node(q, 0), node(t0.partner(q), 0));
    unite(node(q, 1), node(t1.partner(q), 1));
    unite(node(q, 0), node(q, 1));
  }
  std::set<int> roots;
  for (int x = 0; x < 4 * n; ++x) roots.insert(find(parent, x));
  s.boundary_components = static_cast<int>(roots.size()) + t0.loops() + t1.loops();
  return s;
}

std::string to_string(const SurfaceInvariants& s) {
  std::ostringstream out;
  out << "chi=" << s.euler_characteristic << " boundary=" << s.boundary_components
      << " trivial=" << (s.trivial_boundary ? "true" : "false") << " intervals=" << s.interval_components_start
      << " circles=" << s.circle_components_start;
  return out.str();
}

}  // namespace bmw
