#pragma once

#include <vector>

namespace lga {

struct SccResult {
  std::vector<int> comp;  // node -> component id, ids in reverse topological order
  int count = 0;
};

// Iterative Tarjan over an adjacency list. Deterministic: components are
// numbered in the order they are completed.
inline SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stk;
  std::vector<bool> on_stk(n, false);
  int counter = 0;

  struct Frame {
    int v;
    std::size_t i;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        on_stk[v] = true;
      }
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (num[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stk[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on_stk[w] = false;
            res.comp[w] = res.count;
            if (w == v) break;
          }
          ++res.count;
        }
        int finished = v;
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().v;
          low[parent] = std::min(low[parent], low[finished]);
        }
      }
    }
  }
  return res;
}

}  // namespace lga
