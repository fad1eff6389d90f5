#pragma once

#include <algorithm>
#include <vector>

#include "lga/graph.hpp"

namespace lga {

// r(A, w): vertices reachable from A along some path whose label reads w.
// r(A, empty) = A.
inline VertexSet relative_range(const LabeledGraph& g, const VertexSet& A, const Word& w) {
  VertexSet cur = A;
  for (Letter a : w) cur = g.step(cur, a);
  return cur;
}

// r(w) = r(all vertices, w)
inline VertexSet range(const LabeledGraph& g, const Word& w) {
  return relative_range(g, g.full_set(), w);
}

// Tails of paths into A reading w: fold backwards over the word.
inline VertexSet source_set(const LabeledGraph& g, const VertexSet& A, const Word& w) {
  VertexSet cur = A;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = g.co_step(cur, *it);
  return cur;
}

// Length-k labels readable starting inside A, in lexicographic letter order.
inline std::vector<Word> label_blocks(const LabeledGraph& g, const VertexSet& A, int k) {
  std::vector<Word> out;
  Word w;
  auto dfs = [&](auto&& self, const VertexSet& cur) -> void {
    if (static_cast<int>(w.size()) == k) {
      out.push_back(w);
      return;
    }
    for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
      VertexSet nxt = g.step(cur, a);
      if (nxt.empty()) continue;
      w.push_back(a);
      self(self, nxt);
      w.pop_back();
    }
  };
  if (k >= 0) dfs(dfs, A);
  return out;
}

// Length-k labels readable along paths that END inside A.
inline std::vector<Word> receiver_blocks(const LabeledGraph& g, const VertexSet& A, int k) {
  std::vector<Word> out;
  Word w;  // built back to front, reversed on emit
  auto dfs = [&](auto&& self, const VertexSet& cur) -> void {
    if (static_cast<int>(w.size()) == k) {
      out.emplace_back(w.rbegin(), w.rend());
      return;
    }
    for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
      VertexSet prv = g.co_step(cur, a);
      if (prv.empty()) continue;
      w.push_back(a);
      self(self, prv);
      w.pop_back();
    }
  };
  if (k >= 0) dfs(dfs, A);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lga
