#pragma once

// Inline copies of the standard examples, so unit tests never depend on the
// working directory. The data/ files mirror these for CLI use.

#include <string>
#include <vector>

#include "lga/graph.hpp"

namespace lga::fixtures {

inline LabeledGraph two_cycle() {
  Alphabet al = Alphabet::of({"a", "b"});
  return LabeledGraph(al, {"u", "v"}, {{0, 1, 0}, {1, 0, 1}});
}

inline LabeledGraph single_loop() {
  Alphabet al = Alphabet::of({"a"});
  return LabeledGraph(al, {"v"}, {{0, 0, 0}});
}

// full shift on two letters
inline LabeledGraph loops_ab() {
  Alphabet al = Alphabet::of({"a", "b"});
  return LabeledGraph(al, {"v"}, {{0, 0, 0}, {0, 0, 1}});
}

// blocks {ab, bb, ca, cc}: r(a) = r(b) = {q}
inline LabeledGraph cabb() {
  Alphabet al = Alphabet::of({"a", "b", "c"});
  return LabeledGraph(al, {"p", "q", "s"},
                      {{0, 1, 0}, {1, 1, 1}, {2, 0, 2}, {2, 2, 2}});
}

// no two 1s in a row
inline LabeledGraph golden_mean_graph() {
  Alphabet al = Alphabet::of({"0", "1"});
  return LabeledGraph(al, {"u", "v"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
}

inline LanguageSpec golden_mean_lang() {
  Alphabet al = Alphabet::of({"0", "1"});
  return LanguageSpec::make(al, {{1, 1}});
}

// at most one 1 anywhere: forbid 1 0^j 1 for j = 0..cap-1
inline LanguageSpec one_one_lang(int cap = 24) {
  Alphabet al = Alphabet::of({"0", "1"});
  std::vector<Word> forbidden;
  for (int j = 0; j < cap; ++j) {
    Word w;
    w.push_back(1);
    for (int i = 0; i < j; ++i) w.push_back(0);
    w.push_back(1);
    forbidden.push_back(w);
  }
  return LanguageSpec::make(al, forbidden);
}

// p, q in different classes but r({p},a) and r({q},a) share t
inline LabeledGraph non_wlr() {
  Alphabet al = Alphabet::of({"a", "b", "c"});
  return LabeledGraph(al, {"p", "q", "t"},
                      {{0, 2, 0}, {1, 2, 0}, {2, 0, 0}, {0, 0, 1}, {1, 1, 2}});
}

// v and w receive the same words at every length ({a, ba, ca, dba, dca, ...})
// even though their a-predecessors {x, y} and {z} never share a class, so
// splitting by predecessor-class signatures instead of word sets would wrongly
// separate them
inline LabeledGraph signature_divergence() {
  Alphabet al = Alphabet::of({"a", "b", "c", "d", "e"});
  std::vector<std::string> names = {"g", "x", "y", "z", "v", "w", "t"};
  std::vector<Edge> edges = {
      {0, 0, 3},  // g -> g : d
      {0, 1, 1},  // g -> x : b
      {0, 2, 2},  // g -> y : c
      {0, 3, 1},  // g -> z : b
      {0, 3, 2},  // g -> z : c
      {1, 4, 0},  // x -> v : a
      {2, 4, 0},  // y -> v : a
      {3, 5, 0},  // z -> w : a
      {4, 6, 4},  // v -> t : e
      {5, 6, 4},  // w -> t : e
      {6, 6, 4},  // t -> t : e
  };
  return LabeledGraph(al, names, edges);
}

// partitions stall for two levels and then split again: P1 = P2 != P3
inline LabeledGraph plateau_two_levels() {
  Alphabet al = Alphabet::of({"a", "c", "d", "e", "f"});
  std::vector<std::string> names = {"g1", "g2", "g3", "q1", "q2", "p", "u", "v"};
  std::vector<Edge> edges = {
      {0, 0, 1},  // g1 -> g1 : c
      {1, 1, 2},  // g2 -> g2 : d
      {2, 2, 4},  // g3 -> g3 : f
      {0, 3, 1},  // g1 -> q1 : c
      {1, 4, 2},  // g2 -> q2 : d
      {0, 5, 1},  // g1 -> p  : c
      {2, 5, 2},  // g3 -> p  : d
      {5, 6, 0},  // p  -> u  : a
      {3, 7, 0},  // q1 -> v  : a
      {4, 7, 0},  // q2 -> v  : a
      {6, 6, 3},  // u  -> u  : e
      {7, 7, 3},  // v  -> v  : e
  };
  return LabeledGraph(al, names, edges);
}

// disjoint cycles reading (01) and (0011): the block language is a full SCC at
// window 2 yet the closure holds only six points
inline LabeledGraph two_cycle_pair() {
  Alphabet al = Alphabet::of({"0", "1"});
  std::vector<std::string> names = {"c1", "c2", "d1", "d2", "d3", "d4"};
  std::vector<Edge> edges = {
      {0, 1, 0}, {1, 0, 1},                          // (01)
      {2, 3, 0}, {3, 4, 0}, {4, 5, 1}, {5, 2, 1},    // (0011)
  };
  return LabeledGraph(al, names, edges);
}

}  // namespace lga::fixtures
