#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lga/graph.hpp"
#include "lga/partitions.hpp"
#include "lga/ranges.hpp"
#include "lga/scc.hpp"
#include "lga/subshift.hpp"
#include "lga/verdict.hpp"

namespace lga {

// True iff no cycle vertex has a second way out; for a validated graph this
// says the graph is a disjoint union of simple cycles plus trees feeding them,
// and with no sources it is exactly a disjoint union of cycles.
inline bool no_loop_with_exit(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::vector<int> outdeg(n, 0);
  std::vector<bool> self(n, false);
  for (const Edge& e : g.edges()) {
    adj[e.src].push_back(e.dst);
    ++outdeg[e.src];
    if (e.src == e.dst) self[e.src] = true;
  }
  SccResult s = strongly_connected_components(adj);
  std::vector<int> size(s.count, 0);
  for (int v = 0; v < n; ++v) ++size[s.comp[v]];
  for (int v = 0; v < n; ++v) {
    bool on_cycle = size[s.comp[v]] >= 2 || self[v];
    if (on_cycle && outdeg[v] >= 2) return false;
  }
  return true;
}

inline Verdict letter_disjointness_check(const Input& input) {
  if (std::holds_alternative<LanguageSpec>(input))
    return Verdict::holds(json::object(), json::object(),
                          "structural: a just-read word determines its last letter");
  const LabeledGraph& g = std::get<LabeledGraph>(input);
  const int k = static_cast<int>(g.alphabet().size());
  for (Letter a = 0; a < static_cast<Letter>(k); ++a)
    for (Letter b = a + 1; b < static_cast<Letter>(k); ++b) {
      VertexSet ra = range(g, Word{a});
      VertexSet rb = range(g, Word{b});
      if (ra.intersects(rb)) {
        json cert;
        cert["letter_a"] = g.alphabet().name(a);
        cert["letter_b"] = g.alphabet().name(b);
        cert["overlap"] = g.set_str(ra & rb);
        return Verdict::fails(cert, "two letters reach a common vertex");
      }
    }
  return Verdict::holds(json::object(), json::object(),
                        "one-letter ranges are pairwise disjoint");
}

// A class paired with a word it echoes forever is the obstruction here: from
// the class, the letters read at step t must be exactly the t-th letter of the
// word, cyclically. The walk is exact, it stops when a (set, phase) state
// repeats.
inline Verdict disagreeable_check(const LabeledGraph& g, const Tower& t, int bound = 6) {
  if (bound < 1) throw PreconditionError("word length bound must be at least 1");
  const int nl = static_cast<int>(g.alphabet().size());
  const auto& atoms = t.atoms();
  for (const VertexSet& A : atoms) {
    for (int len = 1; len <= bound; ++len) {
      for (const Word& beta : label_blocks(g, A, len)) {
        VertexSet cur = A;
        int phase = 0;
        std::set<std::pair<VertexSet, int>> seen;
        bool agree = true;
        while (agree && !seen.count({cur, phase})) {
          seen.insert({cur, phase});
          for (Letter a = 0; a < static_cast<Letter>(nl) && agree; ++a) {
            bool reads = g.step(cur, a).count() > 0;
            if (reads != (a == beta[phase])) agree = false;
          }
          if (!agree) break;
          cur = g.step(cur, beta[phase]);
          phase = (phase + 1) % len;
        }
        if (agree) {
          json cert;
          cert["class"] = g.set_str(A);
          cert["word"] = word_str(g.alphabet(), beta);
          return Verdict::fails(cert, "the class echoes this word forever",
                                json{{"max_word_length", bound}});
        }
      }
    }
  }
  return Verdict::holds(json{{"max_word_length", bound}}, json::object(),
                        "every class deviates from every word up to the bound");
}

// Embeddability criterion: pairwise disjoint letter ranges plus every block
// pseudo-periodic up to the bound. Both legs are evaluated and reported; in
// graph mode a bounded spot check confirms equal-length ranges stay disjoint.
inline Verdict afe_verdict(const Input& input, int max_block = 12) {
  if (max_block < 2) throw PreconditionError("block bound must be at least 2");
  Verdict letters = letter_disjointness_check(input);
  BlockLanguage B = make_block_language(input);
  Verdict pp = pseudo_periodicity_check(B, max_block);

  json sub;
  sub["letter_disjointness"] = letters.to_json();
  sub["pseudo_periodicity"] = pp.to_json();

  bool bad = letters.status == Status::Fails || pp.status == Status::Fails;
  if (std::holds_alternative<LabeledGraph>(input) && letters.status == Status::Holds) {
    const LabeledGraph& g = std::get<LabeledGraph>(input);
    json spot;
    spot["status"] = "holds";
    bool spot_bad = false;
    for (int k = 2; k <= std::min(max_block, 6) && !spot_bad; ++k) {
      std::vector<Word> words = B.blocks(k);
      if (words.size() > 256) words.resize(256);
      std::vector<VertexSet> rs;
      rs.reserve(words.size());
      for (const Word& w : words) rs.push_back(range(g, w));
      for (std::size_t i = 0; i < words.size() && !spot_bad; ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
          if (rs[i].intersects(rs[j])) {
            spot = json{{"status", "fails"},
                        {"word_a", word_str(g.alphabet(), words[i])},
                        {"word_b", word_str(g.alphabet(), words[j])},
                        {"overlap", g.set_str(rs[i] & rs[j])}};
            spot_bad = true;
            break;
          }
    }
    sub["equal_length_ranges"] = spot;
    bad = bad || spot_bad;
  }

  json bound{{"max_block", max_block}};
  if (bad) return Verdict::fails(sub, "the embeddability criterion fails", bound);
  return Verdict::holds(bound, sub,
                        "letters have disjoint ranges and every block up to the bound is "
                        "pseudo-periodic");
}

// Minimality of the closure decides simplicity once the closure is infinite
// and the word picture applies; anything else is reported as inapplicable
// rather than guessed.
inline Verdict simplicity_verdict(const Input& input, int block_bound = 2, int horizon = 24) {
  json sub;
  Verdict letters = letter_disjointness_check(input);
  sub["letter_disjointness"] = letters.to_json();
  if (letters.status != Status::Holds)
    return Verdict::unknown("inapplicable: letters do not have pairwise disjoint ranges",
                            json::object(), sub);

  BlockLanguage B = make_block_language(input);
  Verdict ci = closure_infinite_check(B, std::max(2, block_bound + 1));
  sub["closure_infinite"] = ci.to_json();
  if (ci.status == Status::Fails)
    return Verdict::unknown("inapplicable: the closure is finite", json::object(), sub);
  if (ci.status == Status::UnknownAtBound)
    return Verdict::unknown("closure growth undecided at the bound", json::object(), sub);

  Verdict mini = minimality_check(B, block_bound, horizon);
  sub["minimality"] = mini.to_json();
  json bound{{"block_length", block_bound}, {"horizon", horizon}};
  if (mini.status == Status::Fails)
    return Verdict::fails(sub, "not simple: an allowed block is avoidable", bound);
  return Verdict::holds(bound, sub,
                        "every allowed block up to the bound is unavoidable; in the "
                        "crossed-product picture this gives simplicity, and with "
                        "quasidiagonality it pins the classification invariants");
}

struct AnalyzeOptions {
  int max_block = 12;        // pseudo-periodicity and closure bound
  int simplicity_block = 2;  // minimality block length
  int horizon = 24;          // avoidance search length
};

struct AnalysisReport {
  json input_summary;
  json options;
  Verdict letter_disjointness;
  Verdict weak_left_resolving;
  Verdict pseudo_periodicity;
  Verdict afe;
  Verdict closure_infinite;
  Verdict simplicity;
  Verdict disagreeable;
  json cross_checks;

  json to_json() const {
    json out;
    out["input"] = input_summary;
    out["options"] = options;
    out["letter_disjointness"] = letter_disjointness.to_json();
    out["weak_left_resolving"] = weak_left_resolving.to_json();
    out["pseudo_periodicity"] = pseudo_periodicity.to_json();
    out["afe"] = afe.to_json();
    out["closure_infinite"] = closure_infinite.to_json();
    out["simplicity"] = simplicity.to_json();
    out["disagreeable"] = disagreeable.to_json();
    out["cross_checks"] = cross_checks;
    return out;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "input: " << input_summary.value("description", std::string("?")) << "\n";
    out << verdict_text("letter-disjointness", letter_disjointness) << "\n";
    out << verdict_text("weak-left-resolving", weak_left_resolving) << "\n";
    out << verdict_text("pseudo-periodicity", pseudo_periodicity) << "\n";
    out << verdict_text("embeddability", afe) << "\n";
    out << verdict_text("closure-infinite", closure_infinite) << "\n";
    out << verdict_text("simplicity", simplicity) << "\n";
    out << verdict_text("disagreeable", disagreeable) << "\n";
    bool ok = true;
    for (const auto& [key, val] : cross_checks.items())
      if (!val.get<bool>()) ok = false;
    out << "cross-checks: " << (ok ? "ok" : "INCONSISTENT") << "\n";
    if (!ok)
      for (const auto& [key, val] : cross_checks.items())
        if (!val.get<bool>()) out << "  failed: " << key << "\n";
    return out.str();
  }
};

inline AnalysisReport analyze(const Input& input, const AnalyzeOptions& opts = {}) {
  AnalysisReport rep;
  rep.options = json{{"max_block", opts.max_block},
                     {"simplicity_block", opts.simplicity_block},
                     {"horizon", opts.horizon}};

  BlockLanguage B = make_block_language(input);
  rep.letter_disjointness = letter_disjointness_check(input);

  if (std::holds_alternative<LabeledGraph>(input)) {
    const LabeledGraph& g = std::get<LabeledGraph>(input);
    Tower t = compute_tower(g);
    json sum;
    sum["type"] = "graph";
    sum["description"] = std::to_string(g.vertex_count()) + " vertices, " +
                         std::to_string(g.edges().size()) + " edges, alphabet size " +
                         std::to_string(g.alphabet().size());
    sum["vertices"] = g.vertex_count();
    sum["edges"] = g.edges().size();
    sum["alphabet"] = g.alphabet().symbols;
    sum["stabilization_level"] = t.stabilization_level;
    sum["class_count"] = t.atom_count();
    if (g.truncated()) sum["truncated"] = true;
    rep.input_summary = sum;
    rep.weak_left_resolving = weakly_left_resolving_check(g, t);
    rep.disagreeable = disagreeable_check(g, t, std::min(opts.max_block, 6));
  } else {
    const LanguageSpec& spec = std::get<LanguageSpec>(input);
    json sum;
    sum["type"] = "language";
    sum["description"] = "alphabet size " + std::to_string(spec.alphabet.size()) + ", " +
                         std::to_string(spec.forbidden.size()) + " forbidden words";
    sum["alphabet"] = spec.alphabet.symbols;
    json fw = json::array();
    for (const Word& w : spec.forbidden) fw.push_back(word_str(spec.alphabet, w));
    sum["forbidden"] = fw;
    rep.input_summary = sum;
    rep.weak_left_resolving = Verdict::holds(
        json::object(), json::object(), "structural: word classes refine by suffix");
    rep.disagreeable = Verdict::unknown("inapplicable: no class structure for a language");
  }

  rep.pseudo_periodicity = pseudo_periodicity_check(B, opts.max_block);
  rep.afe = afe_verdict(input, opts.max_block);
  rep.closure_infinite = closure_infinite_check(B, opts.max_block);
  rep.simplicity = simplicity_verdict(input, opts.simplicity_block, opts.horizon);

  json cc;
  cc["afe_fails_with_letters"] =
      rep.letter_disjointness.status != Status::Fails || rep.afe.status == Status::Fails;
  cc["afe_fails_with_pseudo_periodicity"] =
      rep.pseudo_periodicity.status != Status::Fails || rep.afe.status == Status::Fails;
  cc["afe_bound_matches"] = rep.afe.status != Status::Holds ||
                            rep.afe.bound.value("max_block", -1) == opts.max_block;
  cc["simplicity_needs_infinite_closure"] =
      rep.simplicity.status != Status::Holds || rep.closure_infinite.status == Status::Holds;
  rep.cross_checks = cc;
  return rep;
}

}  // namespace lga
