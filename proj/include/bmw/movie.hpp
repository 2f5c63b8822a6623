#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmw/rules.hpp"
#include "bmw/word.hpp"

namespace bmw {

// One level of a leveled chart. Each kind is the level reading of one chart
// vertex type (or an edge extremum) and rewrites a factor of the current
// cross-section word.
enum class EventKind {
  BlackG,      // (a)  1 <-> g_i^eps
  XDot,        // (d)  1 <-> e_i
  Saddle,      // (e)  g_i^eps <-> e_i
  GCap,        // minimum of a g-edge: 1 -> g_i^eps g_i^-eps
  GCup,        // maximum of a g-edge: g_i^eps g_i^-eps -> 1
  ECap,        // minimum of an e-edge: 1 -> e_i e_i
  ECup,        // maximum of an e-edge: e_i e_i -> 1
  White,       // (c)  braid relation, at one of four rotations
  Crossing,    // (b)/(f)  exchange of two distant letters
  Square8,     // (g)  e_i e_j e_i <-> e_i
  Square5,     // (h)  g_i^eps g_j^eps e_i <-> e_j e_i, or its mirror
  XTri,        // (i)  e_i e_i <-> e_i
  Branch,      // (j)  e_i <-> g_i^eps e_i or e_i g_i^eps
  Square6,     // (k)  g_i^eps g_j^eps e_i <-> e_j g_i^delta g_j^delta
  XStar,       // (i') e_i^below <-> e_i^above, composite
  SquareStar,  // (j') e_i <-> g_i^left e_i g_i^right, composite
  Level,       // trivial level, no rewrite
};

enum class BranchSide { Left, Right };

std::string to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);
// Chart vertex type label ("a".."k", "i'", "j'") realized by an event, or
// empty for edge extrema and trivial levels.
std::string vertex_type_of(EventKind kind, bool crossing_has_hook = false);

// Fields not used by `kind` keep their defaults; build events through the
// factories so that equality is structural.
struct Event {
  EventKind kind = EventKind::Level;
  std::size_t position = 0;
  int i = 0;
  int j = 0;
  int eps = 1;
  int delta = 1;
  int variant = 0;  // White: 5, 15, 16, 17; Square5: 6, 7
  bool forward = true;
  BranchSide side = BranchSide::Left;
  int below = 0;    // XStar
  int above = 0;    // XStar
  int left = 0;     // SquareStar power on the left
  int right = 0;    // SquareStar power on the right
  Letter a{};       // Crossing: left letter before the exchange
  Letter b{};       // Crossing: right letter before the exchange

  friend bool operator==(const Event&, const Event&) = default;

  static Event black(std::size_t pos, int i, int eps, bool create);
  static Event xdot(std::size_t pos, int i, bool create);
  static Event saddle(std::size_t pos, int i, int eps, bool g_to_e);
  static Event gcap(std::size_t pos, int i, int eps);
  static Event gcup(std::size_t pos, int i, int eps);
  static Event ecap(std::size_t pos, int i);
  static Event ecup(std::size_t pos, int i);
  static Event white(std::size_t pos, int i, int j, int variant, int eps, bool forward);
  static Event crossing(std::size_t pos, Letter left, Letter right);
  static Event square8(std::size_t pos, int i, int j, bool forward);
  static Event square5(std::size_t pos, int variant, int i, int j, int eps, bool forward);
  static Event xtri(std::size_t pos, int i, bool merge);
  static Event branch(std::size_t pos, int i, int eps, BranchSide side, bool forward);
  static Event square6(std::size_t pos, int i, int j, int eps, int delta, bool forward);
  static Event xstar(std::size_t pos, int i, int below, int above);
  static Event square_star(std::size_t pos, int i, int left, int right, bool forward);
  static Event level();
};

std::string to_string(const Event& e);

// The factor an event consumes and the factor it produces.
struct EventRewrite {
  std::vector<Letter> source;
  std::vector<Letter> target;
};

// Throws RewriteError (message names the vertex type) on parameter
// constraint violations.
EventRewrite event_rewrite(const Event& e, int degree);
Event inverse(const Event& e);
Word apply_event(const Word& w, const Event& e);

struct ChartMovie {
  int degree = 1;
  Word start{1};
  std::vector<Event> events;

  friend bool operator==(const ChartMovie&, const ChartMovie&) = default;
};

Word movie_slice(const ChartMovie& m, std::size_t level);
std::vector<Word> movie_slices(const ChartMovie& m);
Word final_word(const ChartMovie& m);

struct EventCheck {
  std::size_t index = 0;
  bool ok = true;
  std::string clause;   // vertex type or rule the event reads, e.g. "(b) crossing"
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::optional<std::size_t> first_failure;
  std::string start_message;  // non-empty when the start word itself is bad
  std::vector<EventCheck> events;
};

ValidationReport validate_movie(const ChartMovie& m);
std::string to_string(const ValidationReport& r);
void require_valid(const ChartMovie& m);

enum class Regularity { Regular, NonRegular };
std::string to_string(Regularity r);
Regularity classify(const ChartMovie& m);

bool has_e_caps(const ChartMovie& m);
ChartMovie normalize_caps(const ChartMovie& m);

// Left-combed expansion of XStar, Branch chains for SquareStar and the
// two-step Square5 reading of Square6.
ChartMovie expand_composite_vertices(const ChartMovie& m);
std::vector<Event> expand_event(const Event& e);

// Every sequence of XTri events realizing the XStar vertex whose chart is a
// tree (all binary-tree resolutions, in every level order).
std::vector<std::vector<Event>> xstar_tree_expansions(const Event& xstar);

// Replaces White events read at rotations 15/16/17 by their base-rule
// derivation (GCap/GCup and variant-5 White events).
ChartMovie canonicalize_white_rotations(const ChartMovie& m);

ChartMovie strip_levels(const ChartMovie& m);

}  // namespace bmw
