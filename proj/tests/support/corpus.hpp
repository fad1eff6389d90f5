#pragma once

// Small-graph corpus: every no-sink/no-source multigraph up to a vertex and
// edge budget, plus seeded random graphs with deterministic repair. Tests draw
// identity labelings (one letter per edge) or random labelings from the raw
// arc structure.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lga/graph.hpp"

namespace lga::corpus {

struct RawGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (src, dst), multiset
};

inline bool no_sink_no_source(const RawGraph& rg) {
  std::vector<bool> out(rg.n, false), in(rg.n, false);
  for (auto [s, d] : rg.arcs) {
    out[s] = true;
    in[d] = true;
  }
  for (int v = 0; v < rg.n; ++v)
    if (!out[v] || !in[v]) return false;
  return true;
}

inline std::vector<RawGraph> exhaustive_raw(int max_vertices, int max_edges) {
  std::vector<RawGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    const int slots = n * n;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int remaining) -> void {
      if (!pick.empty()) {
        RawGraph rg;
        rg.n = n;
        for (int s : pick) rg.arcs.push_back({s / n, s % n});
        if (no_sink_no_source(rg)) out.push_back(std::move(rg));
      }
      if (remaining == 0) return;
      for (int s = from; s < slots; ++s) {
        pick.push_back(s);
        self(self, s, remaining - 1);  // nondecreasing: multisets, not sequences
        pick.pop_back();
      }
    };
    rec(rec, 0, max_edges);
  }
  return out;
}

inline std::vector<RawGraph> random_raw(int count, int max_vertices, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<RawGraph> out;
  while (static_cast<int>(out.size()) < count) {
    RawGraph rg;
    rg.n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    auto vertex = [&]() { return std::uniform_int_distribution<int>(0, rg.n - 1)(rng); };
    for (int v = 0; v < rg.n; ++v) rg.arcs.push_back({v, vertex()});
    int extra = std::uniform_int_distribution<int>(0, rg.n)(rng);
    for (int i = 0; i < extra; ++i) rg.arcs.push_back({vertex(), vertex()});
    std::vector<int> indeg(rg.n, 0);
    for (auto [s, d] : rg.arcs) ++indeg[d];
    for (int v = 0; v < rg.n; ++v)
      if (indeg[v] == 0) rg.arcs.push_back({vertex(), v});
    std::sort(rg.arcs.begin(), rg.arcs.end());
    out.push_back(std::move(rg));
  }
  return out;
}

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return names;
}

inline std::vector<std::string> letter_names(int k) {
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// One fresh letter per edge; the labeling map is injective.
inline LabeledGraph identity_labeled(const RawGraph& rg) {
  Alphabet alpha = Alphabet::of(letter_names(static_cast<int>(rg.arcs.size())));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rg.arcs.size(); ++i)
    edges.push_back({rg.arcs[i].first, rg.arcs[i].second, static_cast<Letter>(i)});
  return LabeledGraph(alpha, default_names(rg.n), edges);
}

// Random labeling covering every letter: the first k edges (in a shuffled
// order) get the k distinct letters, the rest draw uniformly.
inline LabeledGraph random_labeled(const RawGraph& rg, int alphabet_size, std::mt19937& rng) {
  const int e = static_cast<int>(rg.arcs.size());
  const int k = std::min(alphabet_size, e);
  std::vector<int> order(e);
  for (int i = 0; i < e; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Letter> labels(e);
  for (int i = 0; i < e; ++i)
    labels[order[i]] =
        i < k ? static_cast<Letter>(i)
              : static_cast<Letter>(std::uniform_int_distribution<int>(0, k - 1)(rng));
  std::vector<Edge> edges;
  for (int i = 0; i < e; ++i)
    edges.push_back({rg.arcs[i].first, rg.arcs[i].second, labels[i]});
  return LabeledGraph(Alphabet::of(letter_names(k)), default_names(rg.n), edges);
}

}  // namespace lga::corpus
