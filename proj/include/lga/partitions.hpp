#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lga/graph.hpp"
#include "lga/ranges.hpp"
#include "lga/verdict.hpp"

namespace lga {

// Blocks are ordered by smallest member, so block indices are canonical and
// partitions compare with plain ==.
struct Partition {
  std::vector<VertexSet> blocks;
  std::vector<int> block_of;  // vertex -> block index

  int size() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

inline Partition partition_from_labels(int n, const std::vector<int>& raw) {
  Partition p;
  p.block_of.assign(n, -1);
  std::map<int, int> remap;  // first appearance while scanning v ascending = min-vertex order
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = remap.emplace(raw[v], static_cast<int>(p.blocks.size()));
    if (inserted) p.blocks.emplace_back(VertexSet(n));
    p.block_of[v] = it->second;
    p.blocks[it->second].set(v);
  }
  return p;
}

inline Partition trivial_partition(int n) {
  return partition_from_labels(n, std::vector<int>(n, 0));
}

// Split every block of p by the membership pattern in `sets`.
inline Partition refine_by_sets(const Partition& p, const std::vector<VertexSet>& sets) {
  const int n = static_cast<int>(p.block_of.size());
  std::map<std::vector<int>, int> keys;
  std::vector<int> raw(n);
  std::vector<int> key;
  for (int v = 0; v < n; ++v) {
    key.clear();
    key.push_back(p.block_of[v]);
    for (const VertexSet& s : sets) key.push_back(s.test(v) ? 1 : 0);
    auto [it, inserted] = keys.emplace(key, static_cast<int>(keys.size()));
    raw[v] = it->second;
  }
  return partition_from_labels(n, raw);
}

// Nested partitions P_1 >= P_2 >= ... where two vertices share a level-l class
// exactly when the same label words of length <= l can be read into both.
// Computed from the family of word ranges: v and w are level-l equivalent iff
// they lie in the same members of {r(alpha) : 1 <= |alpha| <= l}.
struct Tower {
  std::vector<Partition> levels;  // levels[l-1] = partition at depth l, up to stabilization
  int stabilization_level = 1;    // smallest l >= 1 whose partition equals the final one
  int closure_level = 1;          // word length at which the range family stopped growing
  std::vector<VertexSet> family;  // every distinct word range, in discovery order
  int n = 0;

  const Partition& final_partition() const { return levels.back(); }
  const std::vector<VertexSet>& atoms() const { return final_partition().blocks; }
  int atom_count() const { return static_cast<int>(atoms().size()); }

  const Partition& level(int l) const {
    if (l < 1) throw PreconditionError("tower levels start at 1");
    int idx = std::min<int>(l, static_cast<int>(levels.size())) - 1;
    return levels[idx];
  }
  int class_at(int l, int v) const { return level(l).block_of[v]; }
  int atom_of_vertex(int v) const { return final_partition().block_of[v]; }
};

// Word ranges are explored breadth-first as a subset automaton: layer l holds
// the ranges of length-l words not seen at shorter lengths. Once a layer adds
// nothing, r(word a) = step(r(word), a) shows no deeper word ever will, so the
// family and every later partition are final.
inline Tower compute_tower(const LabeledGraph& g, int max_levels = 4096,
                           int max_sets = (1 << 20)) {
  const int n = g.vertex_count();
  Tower t;
  t.n = n;

  std::map<VertexSet, int> seen;
  auto discover = [&](const VertexSet& s) -> bool {
    if (s.empty()) return false;
    auto [it, inserted] = seen.emplace(s, static_cast<int>(t.family.size()));
    if (inserted) t.family.push_back(s);
    return inserted;
  };

  std::vector<VertexSet> fresh;
  const VertexSet all = g.full_set();
  for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
    VertexSet s = g.step(all, a);
    if (discover(s)) fresh.push_back(s);
  }
  t.levels.push_back(refine_by_sets(trivial_partition(n), fresh));
  std::vector<VertexSet> frontier = fresh;

  int lvl = 1;
  while (!frontier.empty()) {
    if (lvl >= max_levels)
      throw BoundError("class tower exceeded " + std::to_string(max_levels) + " levels");
    ++lvl;
    fresh.clear();
    for (const VertexSet& s : frontier)
      for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
        VertexSet nxt = g.step(s, a);
        if (discover(nxt)) fresh.push_back(nxt);
      }
    if (static_cast<int>(t.family.size()) > max_sets)
      throw BoundError("class tower exceeded its range-set budget");
    if (fresh.empty()) break;
    t.levels.push_back(refine_by_sets(t.levels.back(), fresh));
    t.closure_level = lvl;
    frontier = fresh;
  }

  const Partition fin = t.levels.back();
  int stab = static_cast<int>(t.levels.size());
  while (stab > 1 && t.levels[stab - 2] == fin) --stab;
  t.stabilization_level = stab;
  t.levels.resize(stab);  // deeper levels repeat the final partition
  return t;
}

// Disjointness of one-letter ranges across distinct final classes. This is the
// reading that matters for the class algebra: by distributivity it extends to
// every pair of disjoint class unions, and step by step to longer words.
inline Verdict weakly_left_resolving_check(const LabeledGraph& g, const Tower& t) {
  const auto& atoms = t.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
        VertexSet ri = g.step(atoms[i], a);
        VertexSet rj = g.step(atoms[j], a);
        if (ri.intersects(rj)) {
          json cert;
          cert["atom_a"] = g.set_json(atoms[i]);
          cert["atom_b"] = g.set_json(atoms[j]);
          cert["letter"] = g.alphabet().name(a);
          cert["overlap"] = g.set_json(ri & rj);
          return Verdict::fails(cert,
                                "distinct classes reach overlapping vertices under one letter");
        }
      }
  return Verdict::holds(json::object(), json::object(),
                        "one-letter ranges of distinct classes never overlap");
}

inline bool is_accommodating_union(const Tower& t, const VertexSet& A) {
  for (const VertexSet& atom : t.atoms())
    if (atom.intersects(A) && !atom.subset_of(A)) return false;
  return true;
}

struct WordWitness {
  enum class Kind { Unique, NotUnique, NoWitness };
  Kind kind = Kind::NoWitness;
  Word word;    // lexicographically first match when found
  Word second;  // second match when not unique
};

// Searches for words w of the given length with r(w) equal to the chosen class.
inline WordWitness unique_path_label(const LabeledGraph& g, const Tower& t, int level,
                                     int class_index) {
  if (level < 1) throw PreconditionError("level must be at least 1");
  const Partition& p = t.level(level);
  if (class_index < 0 || class_index >= p.size())
    throw PreconditionError("class index out of range");
  const VertexSet& target = p.blocks[class_index];

  std::vector<Word> found;
  Word w;
  auto dfs = [&](auto&& self, const VertexSet& cur) -> void {
    if (found.size() >= 2) return;
    if (static_cast<int>(w.size()) == level) {
      if (cur == target) found.push_back(w);
      return;
    }
    for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
      VertexSet nxt = g.step(cur, a);
      if (nxt.empty()) continue;
      w.push_back(a);
      self(self, nxt);
      w.pop_back();
      if (found.size() >= 2) return;
    }
  };
  dfs(dfs, g.full_set());

  WordWitness res;
  if (found.empty()) return res;
  res.word = found[0];
  if (found.size() >= 2) {
    res.kind = WordWitness::Kind::NotUnique;
    res.second = found[1];
  } else {
    res.kind = WordWitness::Kind::Unique;
  }
  return res;
}

// The unique class C with r(C, a) covering the given class, when unique.
inline std::optional<int> predecessor_atom(const LabeledGraph& g, const Tower& t, int atom_index,
                                           Letter a) {
  const auto& atoms = t.atoms();
  const VertexSet& P = atoms.at(atom_index);
  std::optional<int> found;
  for (int c = 0; c < static_cast<int>(atoms.size()); ++c) {
    if (P.subset_of(g.step(atoms[c], a))) {
      if (found) return std::nullopt;
      found = c;
    }
  }
  return found;
}

// Length-m word read by paths arriving at this class, recovered by walking
// backwards through unique predecessor classes. Needs pairwise-disjoint letter
// ranges to pick each step's letter; otherwise the walk is ambiguous.
inline std::optional<Word> word_of_atom(const LabeledGraph& g, const Tower& t, int atom_index,
                                        int m) {
  Word w(static_cast<std::size_t>(std::max(m, 0)));
  int cur = atom_index;
  for (int i = m - 1; i >= 0; --i) {
    std::optional<Letter> letter;
    for (Letter a = 0; a < static_cast<Letter>(g.alphabet().size()); ++a) {
      if (t.atoms()[cur].subset_of(range(g, Word{a}))) {
        if (letter) return std::nullopt;
        letter = a;
      }
    }
    if (!letter) return std::nullopt;
    auto pred = predecessor_atom(g, t, cur, *letter);
    if (!pred) return std::nullopt;
    w[i] = *letter;
    cur = *pred;
  }
  return w;
}

// chain[l-1] = class index at level l; consecutive classes are nested.
using Chain = std::vector<int>;

inline Chain chain_of_atom(const Tower& t, int atom_index, int depth) {
  if (depth < 1) throw PreconditionError("chain depth must be at least 1");
  int v = t.atoms().at(atom_index).min();
  Chain c(depth);
  for (int l = 1; l <= depth; ++l) c[l - 1] = t.class_at(l, v);
  return c;
}

inline Chain ultrafilter_from_atom(const Tower& t, int atom_index, int depth) {
  return chain_of_atom(t, atom_index, depth);
}

// Completes a partial chain to the target depth; at each new level the
// smallest-index class inside the current one is chosen, so the completion is
// the lexicographically least among the admissible ones.
inline Chain extend_chain(const Tower& t, Chain partial, int depth) {
  if (depth < static_cast<int>(partial.size()))
    throw PreconditionError("target depth is shorter than the partial chain");
  for (int l = 1; l <= static_cast<int>(partial.size()); ++l) {
    const Partition& p = t.level(l);
    int idx = partial[l - 1];
    if (idx < 0 || idx >= p.size())
      throw PreconditionError("class index out of range at level " + std::to_string(l));
    if (l > 1 && !p.blocks[idx].subset_of(t.level(l - 1).blocks[partial[l - 2]]))
      throw PreconditionError("chain classes are not nested at level " + std::to_string(l));
  }
  for (int l = static_cast<int>(partial.size()) + 1; l <= depth; ++l) {
    const Partition& p = t.level(l);
    if (l == 1) {
      partial.push_back(0);
      continue;
    }
    const VertexSet& outer = t.level(l - 1).blocks[partial[l - 2]];
    for (int i = 0; i < p.size(); ++i)
      if (p.blocks[i].subset_of(outer)) {
        partial.push_back(i);
        break;
      }
  }
  return partial;
}

inline json partition_to_json(const LabeledGraph& g, const Partition& p) {
  json arr = json::array();
  for (const VertexSet& b : p.blocks) arr.push_back(g.set_json(b));
  return arr;
}

inline json tower_to_json(const LabeledGraph& g, const Tower& t) {
  json out;
  out["stabilization_level"] = t.stabilization_level;
  out["range_family_size"] = static_cast<int>(t.family.size());
  json lv = json::array();
  for (std::size_t i = 0; i < t.levels.size(); ++i)
    lv.push_back(partition_to_json(g, t.levels[i]));
  out["levels"] = lv;
  out["atoms"] = partition_to_json(g, t.final_partition());
  return out;
}

}  // namespace lga
