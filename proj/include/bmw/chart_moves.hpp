#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bmw/movie.hpp"
#include "json.hpp"

namespace bmw {

enum class MoveKind { CILoop, CICommute, CIWhiteCancel, CII, CIII, TangleB, TangleC };

std::string to_string(MoveKind k);
std::optional<MoveKind> parse_move_kind(std::string_view text);
const std::set<MoveKind>& all_move_kinds();

// Replaces events [begin, end) by `replacement`.
struct MoveInstance {
  MoveKind kind = MoveKind::CICommute;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<Event> replacement;
  std::string label;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// A CII/CIII local picture: two event sequences on the same context word
// with the same end word. Parameters are instantiated over every admissible
// i, j and signs e, d.
struct MoveTemplate {
  std::string name;
  MoveKind kind = MoveKind::CII;
  std::string relation;              // "distant" or "adjacent"
  std::vector<std::string> context;  // letter patterns such as "g(i,e)", "e(j)"
  nlohmann::json left;               // event lists with symbolic parameters
  nlohmann::json right;
};

const std::vector<MoveTemplate>& default_templates();
std::vector<MoveTemplate> parse_templates(const std::string& json_text);

struct MoveOptions {
  std::set<MoveKind> kinds = all_move_kinds();
  std::size_t window = 8;        // longest TangleB span considered
  bool b2prime = false;          // allow (k)/(j') vertices inside TangleB, still forbid (i')
  bool insertions = true;        // CI-loop / CI-white-cancel insertions at every slot
  const std::vector<MoveTemplate>* templates = nullptr;  // defaults when null
};

std::vector<MoveInstance> applicable_moves(const ChartMovie& m, const MoveOptions& options = {});

// Throws RewriteError unless `inst` is among the applicable moves of `m`
// (for its kind and window).
ChartMovie apply_chart_move(const ChartMovie& m, const MoveInstance& inst, const MoveOptions& options = {});
// No applicability check.
ChartMovie splice_move(const ChartMovie& m, const MoveInstance& inst);

// Canonical serialization ignoring trivial levels; equal keys mean equal movies.
std::string canonical_key(const ChartMovie& m);
std::uint64_t canonical_hash(const ChartMovie& m);

enum class SearchStatus { Found, NotFound, BudgetExhausted };
std::string to_string(SearchStatus s);

struct SearchOptions {
  std::size_t depth = 6;
  std::size_t budget = 100000;
  unsigned threads = 1;
  MoveOptions moves;
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<MoveInstance> witness;
  std::size_t explored = 0;
};

// Breadth-first search over chart moves. NotFound is inconclusive.
SearchResult equivalent_bounded(const ChartMovie& a, const ChartMovie& b, const SearchOptions& options = {});

// Applies a witness move by move, checking each against the applicable set.
ChartMovie replay_witness(const ChartMovie& a, const std::vector<MoveInstance>& witness,
                          const MoveOptions& options = {});

}  // namespace bmw
