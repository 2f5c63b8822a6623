#pragma once

// Brute-force strand tracer. Each letter is drawn as explicit wiring between
// two rows of points; a DFS over the resulting graph recovers the pairing of
// the outer rows and the number of closed curves. Knows nothing about the
// library beyond the letter alphabet.

#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Tok {
  char kind;  // 'g', 'G' or 'e'
  int i;
};

struct Diagram {
  std::vector<int> pairing;  // 0..n-1 bottom, n..2n-1 top
  int loops = 0;
};

inline Diagram trace(int n, const std::vector<Tok>& word) {
  const int rows = static_cast<int>(word.size()) + 1;
  auto id = [n](int row, int p) { return row * n + p; };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(rows * n));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int r = 0; r + 1 < rows; ++r) {
    const Tok& t = word[static_cast<std::size_t>(r)];
    const int a = t.i - 1, b = t.i;
    for (int p = 0; p < n; ++p)
      if (p != a && p != b) link(id(r, p), id(r + 1, p));
    if (t.kind == 'e') {
      link(id(r, a), id(r, b));
      link(id(r + 1, a), id(r + 1, b));
    } else {
      link(id(r, a), id(r + 1, b));
      link(id(r, b), id(r + 1, a));
    }
  }
  auto outer = [&](int node) {
    const int row = node / n, p = node % n;
    if (row == 0) return p;
    if (row == rows - 1) return n + p;
    return -1;
  };
  Diagram d;
  d.pairing.assign(static_cast<std::size_t>(2 * n), -1);
  std::vector<char> seen(adj.size(), 0);
  for (int s = 0; s < rows * n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> stack{s}, ends;
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (outer(v) >= 0) ends.push_back(outer(v));
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) seen[static_cast<std::size_t>(w)] = 1, stack.push_back(w);
    }
    if (ends.empty()) {
      ++d.loops;
    } else if (ends.size() == 2) {
      d.pairing[static_cast<std::size_t>(ends[0])] = ends[1];
      d.pairing[static_cast<std::size_t>(ends[1])] = ends[0];
    }
    // with a single row (empty word) bottom and top coincide; handled below
  }
  if (rows == 1)
    for (int p = 0; p < n; ++p) d.pairing[static_cast<std::size_t>(p)] = n + p, d.pairing[static_cast<std::size_t>(n + p)] = p;
  return d;
}

}  // namespace oracle
