#include <exception>
#include <thread>
#include <unordered_set>

#include "bmw/chart_moves.hpp"

namespace bmw {

namespace {

struct Node {
  ChartMovie movie;
  std::size_t parent = 0;
  MoveInstance move;
};

struct Child {
  MoveInstance move;
  ChartMovie movie;
  std::string key;
};

std::vector<Child> expand(const ChartMovie& m, const MoveOptions& o) {
  std::vector<Child> out;
  for (auto& mv : applicable_moves(m, o)) {
    ChartMovie next = splice_move(m, mv);
    std::string key = canonical_key(next);
    out.push_back({std::move(mv), std::move(next), std::move(key)});
  }
  return out;
}

std::vector<MoveInstance> path_to(const std::vector<Node>& nodes, std::size_t k) {
  std::vector<MoveInstance> out;
  for (; k != 0; k = nodes[k].parent) out.push_back(nodes[k].move);
  return {out.rbegin(), out.rend()};
}

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "equivalent";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult equivalent_bounded(const ChartMovie& a, const ChartMovie& b, const SearchOptions& options) {
  if (a.degree != b.degree) throw RewriteError("movies have different degrees");
  require_valid(a);
  require_valid(b);
  const std::string target = canonical_key(b);

  SearchResult result;
  std::vector<Node> nodes{{a, 0, {}}};
  std::unordered_set<std::string> seen{canonical_key(a)};
  result.explored = 1;
  if (seen.contains(target)) {
    result.status = SearchStatus::Found;
    return result;
  }

  std::vector<std::size_t> frontier{0};
  const unsigned workers = std::max(1u, options.threads);
  for (std::size_t d = 0; d < options.depth && !frontier.empty(); ++d) {
    std::vector<std::vector<Child>> children(frontier.size());
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
      try {
        for (std::size_t k = w; k < frontier.size(); k += workers)
          children[k] = expand(nodes[frontier[k]].movie, options.moves);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (auto& c : children[k]) {
        if (!seen.insert(c.key).second) continue;
        nodes.push_back({std::move(c.movie), frontier[k], std::move(c.move)});
        result.explored = seen.size();
        if (c.key == target) {
          result.status = SearchStatus::Found;
          result.witness = path_to(nodes, nodes.size() - 1);
          return result;
        }
        if (seen.size() >= options.budget) {
          result.status = SearchStatus::BudgetExhausted;
          return result;
        }
        next.push_back(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  result.status = SearchStatus::NotFound;
  return result;
}

}  // namespace bmw
