#pragma once

#include <string>

#include "bmw/movie.hpp"

namespace bmw {

struct SurfaceInvariants {
  int euler_characteristic = 0;
  int boundary_components = 0;
  bool trivial_boundary = true;
  int interval_components_start = 0;
  int circle_components_start = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Requires a valid movie without e-edge extrema. Composite events are
// expanded first; Branch, GCap and GCup contribute nothing to chi.
SurfaceInvariants surface_invariants(const ChartMovie& m);
std::string to_string(const SurfaceInvariants& s);

}  // namespace bmw
