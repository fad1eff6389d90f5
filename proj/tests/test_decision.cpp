#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "lga/lga.hpp"
#include "support/fixtures.hpp"

using namespace lga;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("loops without exits") {
  REQUIRE(no_loop_with_exit(fixtures::two_cycle()));
  REQUIRE(no_loop_with_exit(fixtures::single_loop()));
  REQUIRE(no_loop_with_exit(fixtures::two_cycle_pair()));
  REQUIRE_FALSE(no_loop_with_exit(fixtures::loops_ab()));     // two loops at v
  REQUIRE_FALSE(no_loop_with_exit(fixtures::cabb()));         // s loops and exits
  REQUIRE_FALSE(no_loop_with_exit(fixtures::golden_mean_graph()));

  // acyclic truncated graphs have no loop at all
  Alphabet al({"a"});
  LabeledGraph path(al, {"u", "v"}, {{0, 1, 0}}, true);
  REQUIRE(no_loop_with_exit(path));
}

TEST_CASE("letter disjointness over a graph") {
  Verdict good = letter_disjointness_check(Input{fixtures::two_cycle()});
  REQUIRE(good.status == Status::Holds);
  REQUIRE_THAT(good.note, ContainsSubstring("pairwise disjoint"));

  Verdict bad = letter_disjointness_check(Input{fixtures::loops_ab()});
  REQUIRE(bad.status == Status::Fails);
  REQUIRE(bad.certificate["letter_a"] == "a");
  REQUIRE(bad.certificate["letter_b"] == "b");
  REQUIRE(bad.certificate["overlap"] == "{v}");
}

TEST_CASE("letter disjointness is structural for a language") {
  Verdict v = letter_disjointness_check(Input{fixtures::golden_mean_lang()});
  REQUIRE(v.status == Status::Holds);
  REQUIRE_THAT(v.note, ContainsSubstring("structural"));
}

TEST_CASE("echoing classes are found by the cyclic walk") {
  LabeledGraph g = fixtures::two_cycle();
  Tower t = compute_tower(g);
  Verdict v = disagreeable_check(g, t);
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.certificate["class"] == "{u}");
  REQUIRE(v.certificate["word"] == "ab");
  REQUIRE(v.bound["max_word_length"] == 6);

  LabeledGraph s = fixtures::single_loop();
  Tower ts = compute_tower(s);
  Verdict vs = disagreeable_check(s, ts);
  REQUIRE(vs.status == Status::Fails);
  REQUIRE(vs.certificate["class"] == "{v}");
  REQUIRE(vs.certificate["word"] == "a");

  LabeledGraph c = fixtures::cabb();
  Tower tc = compute_tower(c);
  Verdict vc = disagreeable_check(c, tc);
  REQUIRE(vc.status == Status::Fails);
  REQUIRE(vc.certificate["class"] == "{q}");
  REQUIRE(vc.certificate["word"] == "b");

  REQUIRE_THROWS_AS(disagreeable_check(g, t, 0), PreconditionError);
}

TEST_CASE("a class that always reads both letters deviates from every word") {
  LabeledGraph g = fixtures::loops_ab();
  Tower t = compute_tower(g);
  Verdict v = disagreeable_check(g, t, 5);
  REQUIRE(v.status == Status::Holds);
  REQUIRE_THAT(v.note, ContainsSubstring("deviates"));
  REQUIRE(v.bound["max_word_length"] == 5);
}

TEST_CASE("embeddability holds on the two-cycle") {
  Verdict v = afe_verdict(Input{fixtures::two_cycle()});
  REQUIRE(v.status == Status::Holds);
  REQUIRE(v.bound["max_block"] == 12);
  REQUIRE(v.certificate["letter_disjointness"]["status"] == "holds");
  REQUIRE(v.certificate["pseudo_periodicity"]["status"] == "holds");
  REQUIRE(v.certificate["equal_length_ranges"]["status"] == "holds");
}

TEST_CASE("embeddability fails when letters collide") {
  Verdict v = afe_verdict(Input{fixtures::loops_ab()});
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.certificate["letter_disjointness"]["status"] == "fails");
  // the spot check is skipped once the one-letter test already failed
  REQUIRE_FALSE(v.certificate.contains("equal_length_ranges"));
}

TEST_CASE("embeddability fails when a block is not pseudo-periodic") {
  Verdict v = afe_verdict(Input{fixtures::cabb()});
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.certificate["pseudo_periodicity"]["status"] == "fails");
  REQUIRE(v.certificate["pseudo_periodicity"]["certificate"]["block"] == "ab");
}

TEST_CASE("equal-length range spot check catches deeper collisions") {
  // letters 0 and 1 have disjoint ranges here, but the 2-blocks 00 and 10
  // both land on u
  Verdict v = afe_verdict(Input{fixtures::golden_mean_graph()});
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.certificate["letter_disjointness"]["status"] == "holds");
  REQUIRE(v.certificate["equal_length_ranges"]["status"] == "fails");
  REQUIRE(v.certificate["equal_length_ranges"]["word_a"] == "00");
  REQUIRE(v.certificate["equal_length_ranges"]["word_b"] == "10");
  REQUIRE(v.certificate["equal_length_ranges"]["overlap"] == "{u}");
}

TEST_CASE("embeddability holds for the language with one 1") {
  Verdict v = afe_verdict(Input{fixtures::one_one_lang()});
  REQUIRE(v.status == Status::Holds);
  REQUIRE_FALSE(v.certificate.contains("equal_length_ranges"));
  REQUIRE_THROWS_AS(afe_verdict(Input{fixtures::one_one_lang()}, 1), PreconditionError);
}

TEST_CASE("simplicity: avoidable block") {
  Verdict v = simplicity_verdict(Input{fixtures::one_one_lang()});
  REQUIRE(v.status == Status::Fails);
  REQUIRE_THAT(v.note, ContainsSubstring("avoidable"));
  REQUIRE(v.certificate["minimality"]["status"] == "fails");
  REQUIRE(v.certificate["minimality"]["certificate"]["block"] == "1");
  REQUIRE(v.certificate["closure_infinite"]["status"] == "holds");
}

TEST_CASE("simplicity: finite closure is out of scope") {
  Verdict v = simplicity_verdict(Input{fixtures::two_cycle()});
  REQUIRE(v.status == Status::UnknownAtBound);
  REQUIRE_THAT(v.note, ContainsSubstring("closure is finite"));
  REQUIRE(v.certificate["closure_infinite"]["status"] == "fails");
  REQUIRE_FALSE(v.certificate.contains("minimality"));
}

TEST_CASE("simplicity: needs disjoint letter ranges") {
  Verdict v = simplicity_verdict(Input{fixtures::loops_ab()});
  REQUIRE(v.status == Status::UnknownAtBound);
  REQUIRE_THAT(v.note, ContainsSubstring("disjoint ranges"));
  REQUIRE_FALSE(v.certificate.contains("closure_infinite"));
}

TEST_CASE("full analysis of a graph input") {
  AnalysisReport rep = analyze(Input{fixtures::two_cycle()});
  REQUIRE(rep.input_summary["type"] == "graph");
  REQUIRE(rep.input_summary["description"] == "2 vertices, 2 edges, alphabet size 2");
  REQUIRE(rep.input_summary["stabilization_level"] == 1);
  REQUIRE(rep.input_summary["class_count"] == 2);
  REQUIRE(rep.letter_disjointness.status == Status::Holds);
  REQUIRE(rep.weak_left_resolving.status == Status::Holds);
  REQUIRE(rep.pseudo_periodicity.status == Status::Holds);
  REQUIRE(rep.afe.status == Status::Holds);
  REQUIRE(rep.closure_infinite.status == Status::Fails);
  REQUIRE(rep.simplicity.status == Status::UnknownAtBound);
  REQUIRE(rep.disagreeable.status == Status::Fails);
  for (const auto& [key, val] : rep.cross_checks.items()) {
    INFO(key);
    REQUIRE(val.get<bool>());
  }
}

TEST_CASE("full analysis of a language input") {
  AnalysisReport rep = analyze(Input{fixtures::one_one_lang()});
  REQUIRE(rep.input_summary["type"] == "language");
  REQUIRE(rep.input_summary["forbidden"].size() == 24);
  REQUIRE(rep.weak_left_resolving.status == Status::Holds);
  REQUIRE(rep.disagreeable.status == Status::UnknownAtBound);
  REQUIRE_THAT(rep.disagreeable.note, ContainsSubstring("no class structure"));
  REQUIRE(rep.afe.status == Status::Holds);
  REQUIRE(rep.simplicity.status == Status::Fails);
  for (const auto& [key, val] : rep.cross_checks.items()) {
    INFO(key);
    REQUIRE(val.get<bool>());
  }
}

TEST_CASE("analysis options thread through to the bounds") {
  AnalyzeOptions opts;
  opts.max_block = 8;
  opts.horizon = 16;
  AnalysisReport rep = analyze(Input{fixtures::two_cycle()}, opts);
  REQUIRE(rep.options["max_block"] == 8);
  REQUIRE(rep.afe.bound["max_block"] == 8);
  REQUIRE(rep.pseudo_periodicity.bound["max_block"] == 8);
}

TEST_CASE("analysis cross-checks stay consistent on the whole fixture set") {
  std::vector<Input> inputs;
  inputs.emplace_back(fixtures::two_cycle());
  inputs.emplace_back(fixtures::single_loop());
  inputs.emplace_back(fixtures::loops_ab());
  inputs.emplace_back(fixtures::cabb());
  inputs.emplace_back(fixtures::golden_mean_graph());
  inputs.emplace_back(fixtures::signature_divergence());
  inputs.emplace_back(fixtures::plateau_two_levels());
  inputs.emplace_back(fixtures::two_cycle_pair());
  inputs.emplace_back(fixtures::non_wlr());
  inputs.emplace_back(fixtures::golden_mean_lang());
  inputs.emplace_back(fixtures::one_one_lang(12));
  AnalyzeOptions opts;
  opts.max_block = 6;
  for (const Input& in : inputs) {
    AnalysisReport rep = analyze(in, opts);
    INFO(rep.input_summary.dump());
    for (const auto& [key, val] : rep.cross_checks.items()) {
      INFO(key);
      REQUIRE(val.get<bool>());
    }
  }
}

TEST_CASE("report renders to text and json") {
  AnalysisReport rep = analyze(Input{fixtures::two_cycle()});
  std::string text = rep.to_text();
  REQUIRE_THAT(text, ContainsSubstring("input: 2 vertices"));
  REQUIRE_THAT(text, ContainsSubstring("letter-disjointness: holds"));
  REQUIRE_THAT(text, ContainsSubstring("embeddability: holds"));
  REQUIRE_THAT(text, ContainsSubstring("cross-checks: ok"));

  json j = rep.to_json();
  for (const char* key : {"input", "options", "letter_disjointness", "weak_left_resolving",
                          "pseudo_periodicity", "afe", "closure_infinite", "simplicity",
                          "disagreeable", "cross_checks"})
    REQUIRE(j.contains(key));
}

TEST_CASE("truncated inputs are flagged in the summary") {
  Alphabet al({"a"});
  LabeledGraph path(al, {"u", "v"}, {{0, 1, 0}}, true);
  AnalysisReport rep = analyze(Input{path});
  REQUIRE(rep.input_summary["truncated"] == true);
}
