#include <catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "lga/lga.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lga;

TEST_CASE("partitions use smallest-member block order") {
  Partition p = partition_from_labels(4, {7, 2, 7, 5});
  REQUIRE(p.size() == 3);
  REQUIRE(p.block_of == std::vector<int>{0, 1, 0, 2});
  REQUIRE(p.blocks[0].elements() == std::vector<int>{0, 2});

  REQUIRE(trivial_partition(3).size() == 1);

  VertexSet odd(4);
  odd.set(1);
  odd.set(3);
  Partition q = refine_by_sets(p, {odd});
  REQUIRE(q.size() == 3);  // no block mixes odd and even members here
  Partition r = refine_by_sets(trivial_partition(4), {odd});
  REQUIRE(r.size() == 2);
  REQUIRE(r.block_of == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("two-cycle tower stabilizes immediately") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  REQUIRE(t.stabilization_level == 1);
  REQUIRE(t.closure_level == 1);
  REQUIRE(t.atom_count() == 2);
  REQUIRE(g.set_str(t.atoms()[0]) == "{u}");
  REQUIRE(g.set_str(t.atoms()[1]) == "{v}");
  REQUIRE(t.family.size() == 2);
}

TEST_CASE("cabb tower groups p with s") {
  LabeledGraph g = fixtures::cabb();
  Tower t = compute_tower(g);
  REQUIRE(t.stabilization_level == 1);
  REQUIRE(t.atom_count() == 2);
  REQUIRE(g.set_str(t.atoms()[0]) == "{p,s}");
  REQUIRE(g.set_str(t.atoms()[1]) == "{q}");
}

TEST_CASE("tower levels clamp beyond stabilization") {
  Tower t = compute_tower(fixtures::two_cycle());
  REQUIRE(t.level(1) == t.level(57));
  REQUIRE(t.level(57) == t.final_partition());
  REQUIRE(t.class_at(3, 0) == t.atom_of_vertex(0));
  REQUIRE_THROWS_AS(t.level(0), PreconditionError);
}

TEST_CASE("partitions can stall for a level and then split again") {
  LabeledGraph g = fixtures::plateau_two_levels();
  Tower t = compute_tower(g);
  REQUIRE(t.level(1) == t.level(2));
  REQUIRE(t.level(2) != t.level(3));
  REQUIRE(t.stabilization_level == 3);

  int u = g.vertex_index("u"), v = g.vertex_index("v");
  REQUIRE(t.class_at(2, u) == t.class_at(2, v));
  REQUIRE(t.class_at(3, u) != t.class_at(3, v));

  for (int l = 1; l <= 4; ++l) REQUIRE(t.level(l) == oracle::naive_partition(g, l));
}

TEST_CASE("classes are decided by word sets, not predecessor signatures") {
  LabeledGraph g = fixtures::signature_divergence();
  Tower t = compute_tower(g);
  int v = g.vertex_index("v"), w = g.vertex_index("w");
  // v and w receive the same words at every length even though their
  // a-predecessors x, y and z sit in three distinct classes
  REQUIRE(t.atom_of_vertex(v) == t.atom_of_vertex(w));
  REQUIRE(t.atom_count() == 6);
  REQUIRE(t.class_at(1, g.vertex_index("x")) != t.class_at(1, g.vertex_index("z")));
  for (int l = 1; l <= 4; ++l) REQUIRE(t.level(l) == oracle::naive_partition(g, l));
}

TEST_CASE("tower levels match the word-set oracle across a corpus") {
  std::mt19937 rng(5);
  std::vector<LabeledGraph> graphs;
  for (const auto& rg : corpus::exhaustive_raw(3, 4)) graphs.push_back(corpus::identity_labeled(rg));
  for (const auto& rg : corpus::random_raw(40, 6, 17)) {
    graphs.push_back(corpus::identity_labeled(rg));
    graphs.push_back(corpus::random_labeled(rg, 2, rng));
    graphs.push_back(corpus::random_labeled(rg, 3, rng));
  }
  for (const LabeledGraph& g : graphs) {
    Tower t = compute_tower(g);
    int deep = std::min(t.stabilization_level + 1, 4);
    for (int l = 1; l <= deep; ++l) {
      INFO(graph_to_json(g).dump());
      REQUIRE(t.level(l) == oracle::naive_partition(g, l));
    }
  }
}

TEST_CASE("tower budgets turn into bound errors") {
  REQUIRE_THROWS_AS(compute_tower(fixtures::plateau_two_levels(), 1), BoundError);
  REQUIRE_THROWS_AS(compute_tower(fixtures::cabb(), 4096, 1), BoundError);
}

TEST_CASE("weak left resolving holds when class ranges stay disjoint") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  Verdict v = weakly_left_resolving_check(g, t);
  REQUIRE(v.status == Status::Holds);

  LabeledGraph h = fixtures::cabb();
  REQUIRE(weakly_left_resolving_check(h, compute_tower(h)).status == Status::Holds);
}

TEST_CASE("weak left resolving fails with an overlap certificate") {
  LabeledGraph g = fixtures::non_wlr();
  Tower t = compute_tower(g);
  Verdict v = weakly_left_resolving_check(g, t);
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.certificate["letter"] == "a");
  REQUIRE(v.certificate["overlap"] == json::array({"t"}));
}

TEST_CASE("accommodating unions are unions of atoms") {
  LabeledGraph g = fixtures::cabb();
  Tower t = compute_tower(g);
  int p = g.vertex_index("p"), q = g.vertex_index("q"), s = g.vertex_index("s");

  VertexSet ps(3);
  ps.set(p);
  ps.set(s);
  REQUIRE(is_accommodating_union(t, ps));
  REQUIRE(is_accommodating_union(t, g.full_set()));
  REQUIRE(is_accommodating_union(t, g.empty_set()));
  REQUIRE(is_accommodating_union(t, VertexSet::single(3, q)));
  REQUIRE_FALSE(is_accommodating_union(t, VertexSet::single(3, p)));
}

TEST_CASE("unique path labels") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  int cu = t.atom_of_vertex(g.vertex_index("u"));

  WordWitness w1 = unique_path_label(g, t, 1, cu);
  REQUIRE(w1.kind == WordWitness::Kind::Unique);
  REQUIRE(word_str(g.alphabet(), w1.word) == "b");

  WordWitness w3 = unique_path_label(g, t, 3, cu);
  REQUIRE(w3.kind == WordWitness::Kind::Unique);
  REQUIRE(word_str(g.alphabet(), w3.word) == "bab");

  LabeledGraph full = fixtures::loops_ab();
  Tower tf = compute_tower(full);
  WordWitness amb = unique_path_label(full, tf, 1, 0);
  REQUIRE(amb.kind == WordWitness::Kind::NotUnique);
  REQUIRE(word_str(full.alphabet(), amb.word) == "a");
  REQUIRE(word_str(full.alphabet(), amb.second) == "b");

  LabeledGraph nw = fixtures::non_wlr();
  Tower tn = compute_tower(nw);
  int ct = tn.atom_of_vertex(nw.vertex_index("t"));
  REQUIRE(unique_path_label(nw, tn, 1, ct).kind == WordWitness::Kind::NoWitness);

  REQUIRE_THROWS_AS(unique_path_label(g, t, 0, 0), PreconditionError);
  REQUIRE_THROWS_AS(unique_path_label(g, t, 1, 99), PreconditionError);
}

TEST_CASE("predecessor atoms") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  Letter a = g.alphabet().id("a"), b = g.alphabet().id("b");
  int au = t.atom_of_vertex(g.vertex_index("u"));
  int av = t.atom_of_vertex(g.vertex_index("v"));

  REQUIRE(predecessor_atom(g, t, av, a) == au);
  REQUIRE(predecessor_atom(g, t, au, b) == av);
  REQUIRE_FALSE(predecessor_atom(g, t, au, a).has_value());

  // two classes cover {t} under a, so the predecessor is ambiguous
  LabeledGraph nw = fixtures::non_wlr();
  Tower tn = compute_tower(nw);
  int ct = tn.atom_of_vertex(nw.vertex_index("t"));
  REQUIRE_FALSE(predecessor_atom(nw, tn, ct, nw.alphabet().id("a")).has_value());
}

TEST_CASE("word recovery through unique predecessors") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  int au = t.atom_of_vertex(g.vertex_index("u"));
  auto w = word_of_atom(g, t, au, 3);
  REQUIRE(w.has_value());
  REQUIRE(word_str(g.alphabet(), *w) == "bab");
  REQUIRE(word_of_atom(g, t, au, 0)->empty());

  // r(a) = r(b), so the letter into {q} is ambiguous
  LabeledGraph h = fixtures::cabb();
  Tower th = compute_tower(h);
  int aq = th.atom_of_vertex(h.vertex_index("q"));
  REQUIRE_FALSE(word_of_atom(h, th, aq, 1).has_value());

  LabeledGraph full = fixtures::loops_ab();
  Tower tf = compute_tower(full);
  REQUIRE_FALSE(word_of_atom(full, tf, 0, 1).has_value());
}

TEST_CASE("chains walk nested classes") {
  LabeledGraph g = fixtures::plateau_two_levels();
  Tower t = compute_tower(g);
  int av = t.atom_of_vertex(g.vertex_index("v"));
  Chain c = chain_of_atom(t, av, 5);
  REQUIRE(c.size() == 5);
  for (int l = 1; l <= 5; ++l) REQUIRE(c[l - 1] == t.class_at(l, g.vertex_index("v")));
  // nesting: each class is contained in its predecessor
  for (int l = 2; l <= 5; ++l)
    REQUIRE(t.level(l).blocks[c[l - 1]].subset_of(t.level(l - 1).blocks[c[l - 2]]));
  REQUIRE(ultrafilter_from_atom(t, av, 5) == c);
  REQUIRE_THROWS_AS(chain_of_atom(t, av, 0), PreconditionError);
}

TEST_CASE("chain extension picks the least admissible completion") {
  LabeledGraph g = fixtures::plateau_two_levels();
  Tower t = compute_tower(g);
  int u = g.vertex_index("u");
  Chain partial = {t.class_at(1, u)};
  Chain full = extend_chain(t, partial, 3);
  REQUIRE(full.size() == 3);
  REQUIRE(t.level(3).blocks[full[2]].subset_of(t.level(1).blocks[partial[0]]));

  // {u, v} at level 2 splits into {u} and {v}; the smaller class index wins
  Chain uv = {t.class_at(1, u), t.class_at(2, u)};
  Chain ext = extend_chain(t, uv, 3);
  int got = ext[2];
  REQUIRE((got == t.class_at(3, u) || got == t.class_at(3, g.vertex_index("v"))));
  REQUIRE(got == std::min(t.class_at(3, u), t.class_at(3, g.vertex_index("v"))));

  REQUIRE_THROWS_AS(extend_chain(t, {0, 0, 0}, 2), PreconditionError);
  REQUIRE_THROWS_AS(extend_chain(t, {99}, 3), PreconditionError);
}

TEST_CASE("chain extension rejects non-nested prefixes") {
  LabeledGraph g = fixtures::plateau_two_levels();
  Tower t = compute_tower(g);
  int u = g.vertex_index("u"), p = g.vertex_index("p");
  // level-3 class of p does not sit inside level-2 class of u
  Chain bad = {t.class_at(1, u), t.class_at(2, u), t.class_at(3, p)};
  REQUIRE_THROWS_AS(extend_chain(t, bad, 4), PreconditionError);
}

TEST_CASE("tower json carries levels and atoms") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  json j = tower_to_json(g, t);
  REQUIRE(j["stabilization_level"] == 1);
  REQUIRE(j["range_family_size"] == 2);
  REQUIRE(j["atoms"] == json::array({json::array({"u"}), json::array({"v"})}));
}
