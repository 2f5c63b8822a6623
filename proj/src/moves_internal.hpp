#pragma once

#include <string>
#include <vector>

#include "bmw/chart_moves.hpp"

namespace bmw::detail {

// A template with concrete parameters, read in one direction: events `from`
// on `context` (at offset 0) are replaced by `to`.
struct ConcreteMove {
  std::string name;
  MoveKind kind = MoveKind::CII;
  std::vector<Letter> context;
  std::vector<Event> from;
  std::vector<Event> to;
};

std::vector<ConcreteMove> instantiate(const std::vector<MoveTemplate>& templates, int degree);
std::vector<Event> reversed_inverse(const std::vector<Event>& events);

}  // namespace bmw::detail
