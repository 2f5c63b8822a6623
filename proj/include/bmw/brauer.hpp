#pragma once

#include <string>
#include <vector>

#include "bmw/word.hpp"

namespace bmw {

// Connectivity shadow of a tangle: a perfect matching of the 2n boundary
// points plus the number of closed components. Points 0..n-1 are the bottom
// points (strand positions 1..n at t=0), n..2n-1 the top points.
class BrauerDiagram {
 public:
  explicit BrauerDiagram(int degree);  // identity
  BrauerDiagram(int degree, std::vector<int> pairing, int loops);

  static BrauerDiagram transposition(int degree, int i);
  static BrauerDiagram hook(int degree, int i);

  int degree() const { return degree_; }
  const std::vector<int>& pairing() const { return pairing_; }
  int loops() const { return loops_; }
  int bottom(int strand) const { return strand - 1; }
  int top(int strand) const { return degree_ + strand - 1; }
  int partner(int point) const { return pairing_.at(static_cast<std::size_t>(point)); }

  // `below` first, then `above` stacked on top of it.
  friend BrauerDiagram compose(const BrauerDiagram& below, const BrauerDiagram& above);
  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;

  BrauerDiagram with_loops(int loops) const { return BrauerDiagram(degree_, pairing_, loops); }

 private:
  int degree_;
  std::vector<int> pairing_;
  int loops_ = 0;
};

BrauerDiagram compose(const BrauerDiagram& below, const BrauerDiagram& above);
BrauerDiagram brauer_image(const Word& w);
std::string to_string(const BrauerDiagram& d);

}  // namespace bmw
