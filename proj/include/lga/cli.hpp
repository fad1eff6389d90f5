#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lga/decision.hpp"
#include "lga/graph.hpp"
#include "lga/parse.hpp"
#include "lga/skew.hpp"
#include "lga/subshift.hpp"
#include "lga/topograph.hpp"

namespace lga {

// Accepts 2^-k, 1/2^k, or 1/N with N a power of two. Only dyadic scales make
// sense for the ultrametric, so anything else is rejected.
inline int parse_epsilon(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = []() {
    return ValidationError("epsilon must be dyadic: 2^-k, 1/2^k, or 1/N with N a power of two");
  };
  try {
    long long k = -1;
    if (s.rfind("2^-", 0) == 0) {
      k = std::stoll(s.substr(3));
    } else if (s.rfind("1/2^", 0) == 0) {
      k = std::stoll(s.substr(4));
    } else if (s.rfind("1/", 0) == 0) {
      long long n = std::stoll(s.substr(2));
      if (n < 2 || (n & (n - 1)) != 0) throw bad();
      k = 0;
      while (n > 1) {
        n >>= 1;
        ++k;
      }
    } else {
      throw bad();
    }
    if (k < 1 || k > 30) throw bad();
    return static_cast<int>(k);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw ValidationError("cocycle lists are comma-separated integers");
    }
  }
  return out;
}

namespace detail {

inline int resolve_top_vertex(const TopGraph& T, const std::string& name) {
  if (T.mode == TgMode::Atom) {
    const LabeledGraph& g = *T.base_graph;
    return T.tower->atom_of_vertex(g.vertex_index(name));
  }
  Word w = parse_word(T.alpha, name);
  if (static_cast<int>(w.size()) != T.depth)
    throw ValidationError("vertex word must have length " + std::to_string(T.depth));
  for (int i = 0; i < T.vertex_count(); ++i)
    if (T.vertices[i].word == w) return i;
  throw ValidationError("the word '" + name + "' is not allowed at this depth");
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"analyzer for labeled graphs and their block languages"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string a_path;
  int a_max_block = 12, a_window = 24;
  auto* cmd_analyze = app.add_subcommand("analyze", "run every check and print a full report");
  cmd_analyze->add_option("input", a_path, "graph or language file")->required();
  cmd_analyze->add_option("--max-block", a_max_block, "pseudo-periodicity block bound");
  cmd_analyze->add_option("--window", a_window, "avoidance search horizon");

  std::string v_path;
  int v_max_block = 12;
  auto* cmd_verdict = app.add_subcommand("verdict", "embeddability criterion only");
  cmd_verdict->add_option("input", v_path, "graph or language file")->required();
  cmd_verdict->add_option("--max-block", v_max_block, "pseudo-periodicity block bound");

  std::string p_path, p_eps, p_vertex, p_word;
  int p_depth = 0;
  auto* cmd_loop = app.add_subcommand("pseudoloop", "search for a pseudoloop at a vertex");
  cmd_loop->add_option("input", p_path, "graph or language file")->required();
  cmd_loop->add_option("--vertex", p_vertex, "base vertex (graph vertex or depth-L word)")
      ->required();
  cmd_loop->add_option("--epsilon", p_eps, "dyadic scale, e.g. 2^-4")->required();
  cmd_loop->add_option("--word", p_word, "base word hint when letters share ranges");
  cmd_loop->add_option("--depth", p_depth, "chain depth (default: stabilization level)");

  std::string s_path;
  int s_block = 2, s_window = 24;
  auto* cmd_simple = app.add_subcommand("simplicity", "minimality-based simplicity verdict");
  cmd_simple->add_option("input", s_path, "graph or language file")->required();
  cmd_simple->add_option("--max-block", s_block, "unavoidability block bound");
  cmd_simple->add_option("--window", s_window, "avoidance search horizon");

  std::string t_path;
  int t_depth = 0, t_window = 4;
  unsigned t_seed = 0;
  auto* cmd_top = app.add_subcommand("topgraph", "build the dual graph and check the shift");
  cmd_top->add_option("input", t_path, "graph or language file")->required();
  cmd_top->add_option("--depth", t_depth, "chain or truncation depth");
  cmd_top->add_option("--window", t_window, "shift comparison path length");
  cmd_top->add_option("--seed", t_seed, "sampling seed for the shift check");

  std::string k_path, k_cocycle, k_label_cocycle;
  int k_window = 1;
  auto* cmd_skew = app.add_subcommand("skew", "grade a graph by edge cocycles");
  cmd_skew->add_option("input", k_path, "graph file")->required();
  cmd_skew->add_option("--cocycle", k_cocycle, "comma list, one grade step per edge");
  cmd_skew->add_option("--label-cocycle", k_label_cocycle, "comma list, label grades");
  cmd_skew->add_option("--window", k_window, "grading window half-width");

  std::string d_path;
  int d_depth = 0;
  bool d_dual = false;
  auto* cmd_dot = app.add_subcommand("export-dot", "emit DOT for the graph or its dual");
  cmd_dot->add_option("input", d_path, "graph or language file")->required();
  cmd_dot->add_flag("--dual", d_dual, "export the dual graph instead of the input");
  cmd_dot->add_option("--depth", d_depth, "dual depth (language inputs are always dual)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto emit = [&](const json& doc, const std::string& text) {
    if (format == "json")
      out << doc.dump(2) << "\n";
    else
      out << text;
  };
  auto fail = [&](const std::string& kind, const std::string& message, int line, int code) {
    if (format == "json") {
      json doc;
      doc["error"] = json{{"kind", kind}, {"message", message}};
      if (line > 0) doc["error"]["line"] = line;
      out << doc.dump(2) << "\n";
    } else {
      err << "error: " << message << "\n";
    }
    return code;
  };

  try {
    if (*cmd_analyze) {
      Input in = parse_input_file(a_path);
      AnalyzeOptions o;
      o.max_block = a_max_block;
      o.horizon = a_window;
      AnalysisReport rep = analyze(in, o);
      emit(rep.to_json(), rep.to_text());
    } else if (*cmd_verdict) {
      Input in = parse_input_file(v_path);
      Verdict v = afe_verdict(in, v_max_block);
      emit(v.to_json(), verdict_text("embeddability", v) + "\n");
    } else if (*cmd_loop) {
      Input in = parse_input_file(p_path);
      TopGraph T = build_top_graph(in, p_depth);
      int eps_k = parse_epsilon(p_eps);
      int v = detail::resolve_top_vertex(T, p_vertex);
      std::optional<Word> hint;
      if (!p_word.empty()) hint = parse_word(T.alpha, p_word);
      PseudoloopResult res = find_pseudoloop(T, v, eps_k, hint);
      json doc = res.verdict.to_json();
      doc["based_at"] = T.vertices[v].name;
      emit(doc, verdict_text("pseudoloop", res.verdict) + "\n");
    } else if (*cmd_simple) {
      Input in = parse_input_file(s_path);
      Verdict v = simplicity_verdict(in, s_block, s_window);
      emit(v.to_json(), verdict_text("simplicity", v) + "\n");
    } else if (*cmd_top) {
      Input in = parse_input_file(t_path);
      TopGraph T = build_top_graph(in, t_depth);
      Verdict sc = shift_conjugacy_check(T, t_window, t_seed);
      json doc;
      doc["topgraph"] = topgraph_to_json(T);
      doc["shift_conjugacy"] = sc.to_json();
      std::ostringstream text;
      text << "mode: " << (T.mode == TgMode::Atom ? "classes" : "suffixes") << "\n"
           << "depth: " << T.depth << "\n"
           << "vertices: " << T.vertex_count() << "\n"
           << "edges: " << T.edge_count() << "\n"
           << "d injective: " << (T.d_injective ? "yes" : "no") << "\n"
           << verdict_text("shift-conjugacy", sc) << "\n";
      emit(doc, text.str());
    } else if (*cmd_skew) {
      Input in = parse_input_file(k_path);
      if (!std::holds_alternative<LabeledGraph>(in))
        throw ValidationError("skew products need a graph input");
      SkewProductSpec spec{std::get<LabeledGraph>(in)};
      spec.window = k_window;
      if (!k_cocycle.empty()) spec.c = parse_int_list(k_cocycle);
      if (!k_label_cocycle.empty()) spec.d = parse_int_list(k_label_cocycle);
      LabeledGraph sk = skew_product(spec);
      emit(graph_to_json(sk), graph_to_text(sk));
    } else if (*cmd_dot) {
      Input in = parse_input_file(d_path);
      bool dual = d_dual || std::holds_alternative<LanguageSpec>(in);
      if (dual) {
        TopGraph T = build_top_graph(in, d_depth);
        out << topgraph_to_dot(T);
      } else {
        out << graph_to_dot(std::get<LabeledGraph>(in));
      }
    }
    return 0;
  } catch (const ParseError& e) {
    return fail("parse", e.what(), e.line, 2);
  } catch (const ValidationError& e) {
    return fail("validation", e.what(), 0, 2);
  } catch (const BoundError& e) {
    return fail("bound", e.what(), 0, 2);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), 0, 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 0, 1);
  }
}

}  // namespace lga
