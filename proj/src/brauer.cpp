#include "bmw/brauer.hpp"

#include <numeric>
#include <sstream>

namespace bmw {

BrauerDiagram::BrauerDiagram(int degree) : degree_(degree), pairing_(2 * static_cast<std::size_t>(degree)) {
  for (int k = 0; k < degree; ++k) {
    pairing_[static_cast<std::size_t>(k)] = degree + k;
    pairing_[static_cast<std::size_t>(degree + k)] = k;
  }
}

BrauerDiagram::BrauerDiagram(int degree, std::vector<int> pairing, int loops)
    : degree_(degree), pairing_(std::move(pairing)), loops_(loops) {
  const int size = 2 * degree;
  if (static_cast<int>(pairing_.size()) != size) throw RewriteError("pairing has wrong size");
  for (int p = 0; p < size; ++p) {
    int q = pairing_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size || q == p || pairing_[static_cast<std::size_t>(q)] != p)
      throw RewriteError("pairing is not a fixed-point-free involution");
  }
  if (loops < 0) throw RewriteError("negative loop count");
}

BrauerDiagram BrauerDiagram::transposition(int degree, int i) {
  BrauerDiagram d(degree);
  auto& p = d.pairing_;
  int b0 = i - 1, b1 = i, t0 = degree + i - 1, t1 = degree + i;
  p[static_cast<std::size_t>(b0)] = t1;
  p[static_cast<std::size_t>(t1)] = b0;
  p[static_cast<std::size_t>(b1)] = t0;
  p[static_cast<std::size_t>(t0)] = b1;
  return d;
}

BrauerDiagram BrauerDiagram::hook(int degree, int i) {
  BrauerDiagram d(degree);
  auto& p = d.pairing_;
  int b0 = i - 1, b1 = i, t0 = degree + i - 1, t1 = degree + i;
  p[static_cast<std::size_t>(b0)] = b1;
  p[static_cast<std::size_t>(b1)] = b0;
  p[static_cast<std::size_t>(t0)] = t1;
  p[static_cast<std::size_t>(t1)] = t0;
  return d;
}

BrauerDiagram compose(const BrauerDiagram& below, const BrauerDiagram& above) {
  if (below.degree_ != above.degree_) throw RewriteError("degree mismatch in Brauer composition");
  const int n = below.degree_;
  // Glued points 0..n-1 (below.top == above.bottom) are the middle layer.
  std::vector<int> out(2 * static_cast<std::size_t>(n), -1);
  std::vector<bool> middle_seen(static_cast<std::size_t>(n), false);

  // Outer point encoding: 0..n-1 below.bottom, n..2n-1 above.top.
  auto walk = [&](bool in_below, int point) -> int {
    // point is an index into the respective diagram's pairing.
    for (;;) {
      if (in_below) {
        int q = below.pairing_[static_cast<std::size_t>(point)];
        if (q < n) return q;
        middle_seen[static_cast<std::size_t>(q - n)] = true;
        in_below = false;
        point = q - n;
      } else {
        int q = above.pairing_[static_cast<std::size_t>(point)];
        if (q >= n) return q;
        middle_seen[static_cast<std::size_t>(q)] = true;
        in_below = true;
        point = n + q;
      }
    }
  };

  for (int k = 0; k < n; ++k) {
    if (out[static_cast<std::size_t>(k)] < 0) {
      int end = walk(true, k);
      out[static_cast<std::size_t>(k)] = end;
      out[static_cast<std::size_t>(end)] = k;
    }
    int t = n + k;
    if (out[static_cast<std::size_t>(t)] < 0) {
      int end = walk(false, t);
      out[static_cast<std::size_t>(t)] = end;
      out[static_cast<std::size_t>(end)] = t;
    }
  }

  int loops = below.loops_ + above.loops_;
  for (int k = 0; k < n; ++k) {
    if (middle_seen[static_cast<std::size_t>(k)]) continue;
    // An unvisited middle point lies on a closed cycle.
    ++loops;
    int point = k;  // above.bottom index
    do {
      middle_seen[static_cast<std::size_t>(point)] = true;
      int q = above.pairing_[static_cast<std::size_t>(point)];  // another middle point (q < n)
      middle_seen[static_cast<std::size_t>(q)] = true;
      point = below.pairing_[static_cast<std::size_t>(n + q)] - n;
    } while (point != k);
  }
  return BrauerDiagram(n, std::move(out), loops);
}

BrauerDiagram brauer_image(const Word& w) {
  BrauerDiagram d(w.degree());
  for (const auto& l : w.letters()) {
    d = compose(d, l.is_hook() ? BrauerDiagram::hook(w.degree(), l.index)
                               : BrauerDiagram::transposition(w.degree(), l.index));
  }
  return d;
}

std::string to_string(const BrauerDiagram& d) {
  std::ostringstream out;
  const int n = d.degree();
  auto name = [n](int p) { return (p < n ? "b" : "t") + std::to_string(p < n ? p + 1 : p - n + 1); };
  out << '{';
  bool first = true;
  for (int p = 0; p < 2 * n; ++p) {
    int q = d.partner(p);
    if (q < p) continue;
    if (!first) out << ' ';
    first = false;
    out << '(' << name(p) << ',' << name(q) << ')';
  }
  out << "} loops=" << d.loops();
  return out.str();
}

}  // namespace bmw
