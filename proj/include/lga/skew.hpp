#pragma once

#include <map>
#include <string>
#include <vector>

#include "lga/graph.hpp"

namespace lga {

// Skew product by integer cocycles: c shifts the vertex grading along an edge,
// d shifts the letter grading. Both are given per edge (index into g.edges()).
// The result keeps every grade in [-window, window]; edges falling outside are
// dropped, so the product is a truncated view of the infinite object.
struct SkewProductSpec {
  LabeledGraph base;
  std::vector<int> c;  // per edge, default all 1
  std::vector<int> d;  // per edge, default all 0
  int window = 1;
};

inline LabeledGraph skew_product(const SkewProductSpec& spec) {
  const LabeledGraph& g = spec.base;
  const int W = spec.window;
  if (W < 1) throw ValidationError("empty window");
  const int m = static_cast<int>(g.edges().size());
  std::vector<int> c = spec.c.empty() ? std::vector<int>(m, 1) : spec.c;
  std::vector<int> d = spec.d.empty() ? std::vector<int>(m, 0) : spec.d;
  if (static_cast<int>(c.size()) != m) throw ValidationError("cocycle c has wrong length");
  if (static_cast<int>(d.size()) != m) throw ValidationError("cocycle d has wrong length");

  const int span = 2 * W + 1;
  auto grade_name = [](const std::string& s, int gr) { return s + "@" + std::to_string(gr); };

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(g.vertex_count()) * span);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int gr = -W; gr <= W; ++gr) names.push_back(grade_name(g.vertex_name(v), gr));
  auto vid = [&](int v, int gr) { return v * span + (gr + W); };

  // graded letters that actually occur, collected letter-major, grade ascending
  std::vector<std::vector<bool>> seen(g.alphabet().size(), std::vector<bool>(span, false));
  struct RawEdge {
    int src, dst;
    Letter base_label;
    int grade;  // of the label
  };
  std::vector<RawEdge> raw;
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    for (int gr = -W; gr <= W; ++gr) {
      int gr2 = gr + c[i];
      if (gr2 < -W || gr2 > W) continue;
      raw.push_back({vid(e.src, gr), vid(e.dst, gr2), e.label, gr + d[i]});
    }
  }
  std::map<std::pair<Letter, int>, bool> occur;
  for (const RawEdge& r : raw) occur[{r.base_label, r.grade}] = true;

  std::vector<std::string> syms;
  std::map<std::pair<Letter, int>, Letter> lid;
  for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
    // grades in ascending order for each base letter
    for (auto& [key, _] : occur) {
      if (key.first != a) continue;
      lid[key] = static_cast<Letter>(syms.size());
      syms.push_back(grade_name(g.alphabet().name(a), key.second));
    }
  }
  if (syms.empty()) throw ValidationError("empty window");

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& r : raw) edges.push_back({r.src, r.dst, lid.at({r.base_label, r.grade})});

  return LabeledGraph(Alphabet::of(std::move(syms)), std::move(names), std::move(edges),
                      /*truncated=*/true);
}

}  // namespace lga
