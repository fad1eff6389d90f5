#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lga/core.hpp"
#include "lga/graph.hpp"

namespace lga {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// Line format:
//   alphabet: a b c
//   vertices: u v w        (optional; otherwise order of first appearance)
//   edge u v a             (one per line; '#' starts a comment)
//   truncated              (flag line, rarely used by hand)
inline LabeledGraph parse_graph_text(const std::string& text) {
  std::vector<std::string> alpha_syms;
  std::vector<std::string> declared;
  bool have_vertices = false, truncated = false;
  struct RawEdge {
    std::string src, dst, label;
    int line;
  };
  std::vector<RawEdge> raw;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.rfind("alphabet:", 0) == 0) {
      if (!alpha_syms.empty()) throw ParseError("repeated alphabet line", line_no);
      alpha_syms = detail::split_ws(line.substr(9));
      if (alpha_syms.empty()) throw ParseError("alphabet line lists no symbols", line_no);
    } else if (line.rfind("vertices:", 0) == 0) {
      if (have_vertices) throw ParseError("repeated vertices line", line_no);
      declared = detail::split_ws(line.substr(9));
      have_vertices = true;
      if (declared.empty()) throw ParseError("vertices line lists no names", line_no);
    } else if (line.rfind("edge", 0) == 0 && (line.size() == 4 || line[4] == ' ' || line[4] == '\t')) {
      auto parts = detail::split_ws(line.substr(4));
      if (parts.size() != 3)
        throw ParseError("edge line needs 'edge <src> <dst> <label>'", line_no);
      raw.push_back({parts[0], parts[1], parts[2], line_no});
    } else if (line == "truncated") {
      truncated = true;
    } else {
      throw ParseError("unrecognized line '" + line + "'", line_no);
    }
  }

  if (alpha_syms.empty()) throw ParseError("no alphabet line");
  Alphabet alpha = Alphabet::of(alpha_syms);

  std::vector<std::string> names = declared;
  std::map<std::string, int> vidx;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!vidx.emplace(names[i], i).second)
      throw ParseError("duplicate vertex '" + names[i] + "' in vertices line");
  }
  auto resolve = [&](const std::string& name, int ln) -> int {
    auto it = vidx.find(name);
    if (it != vidx.end()) return it->second;
    if (have_vertices)
      throw ParseError("edge uses undeclared vertex '" + name + "'", ln);
    int id = static_cast<int>(names.size());
    names.push_back(name);
    vidx.emplace(name, id);
    return id;
  };

  std::vector<Edge> edges;
  for (const RawEdge& r : raw) {
    int s = resolve(r.src, r.line);
    int d = resolve(r.dst, r.line);
    if (!alpha.has(r.label))
      throw ParseError("edge label '" + r.label + "' is not in the alphabet", r.line);
    edges.push_back({s, d, alpha.id(r.label)});
  }
  if (names.empty()) throw ParseError("graph has no vertices");
  return LabeledGraph(std::move(alpha), std::move(names), std::move(edges), truncated);
}

inline LabeledGraph parse_graph_json(const json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "alphabet" && k != "vertices" && k != "edges" && k != "truncated")
      throw ParseError("unknown key '" + k + "' in graph object");
  }
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw ParseError("graph object needs an 'alphabet' array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("graph object needs an 'edges' array");

  Alphabet alpha = Alphabet::of(j["alphabet"].get<std::vector<std::string>>());

  std::vector<std::string> names;
  std::map<std::string, int> vidx;
  bool have_vertices = j.contains("vertices");
  if (have_vertices) {
    if (!j["vertices"].is_array()) throw ParseError("'vertices' must be an array");
    names = j["vertices"].get<std::vector<std::string>>();
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (!vidx.emplace(names[i], i).second)
        throw ParseError("duplicate vertex '" + names[i] + "'");
  }
  auto resolve = [&](const std::string& name) -> int {
    auto it = vidx.find(name);
    if (it != vidx.end()) return it->second;
    if (have_vertices) throw ParseError("edge uses undeclared vertex '" + name + "'");
    int id = static_cast<int>(names.size());
    names.push_back(name);
    vidx.emplace(name, id);
    return id;
  };

  std::vector<Edge> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("each edge must be a [src, dst, label] triple");
    std::string src = e[0].get<std::string>(), dst = e[1].get<std::string>(),
                lab = e[2].get<std::string>();
    int s = resolve(src), d = resolve(dst);
    if (!alpha.has(lab)) throw ParseError("edge label '" + lab + "' is not in the alphabet");
    edges.push_back({s, d, alpha.id(lab)});
  }
  bool truncated = j.value("truncated", false);
  if (names.empty()) throw ParseError("graph has no vertices");
  return LabeledGraph(std::move(alpha), std::move(names), std::move(edges), truncated);
}

inline LanguageSpec parse_language_json(const json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "alphabet" && k != "forbidden")
      throw ParseError("unknown key '" + k + "' in language object");
  }
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw ParseError("language object needs an 'alphabet' array");
  if (!j.contains("forbidden") || !j["forbidden"].is_array())
    throw ParseError("language object needs a 'forbidden' array");

  Alphabet alpha = Alphabet::of(j["alphabet"].get<std::vector<std::string>>());
  std::vector<Word> forbidden;
  for (const json& f : j["forbidden"]) {
    Word w;
    if (f.is_string()) {
      w = parse_word(alpha, f.get<std::string>());
    } else if (f.is_array()) {
      for (const json& tok : f) {
        if (!tok.is_string()) throw ParseError("forbidden word entries must be symbol strings");
        w.push_back(alpha.id(tok.get<std::string>()));
      }
    } else {
      throw ParseError("forbidden words must be strings or symbol arrays");
    }
    forbidden.push_back(std::move(w));
  }
  return LanguageSpec::make(std::move(alpha), std::move(forbidden));
}

// Sniffs the format: JSON when the first non-whitespace byte is '{'
// (then a "forbidden" key selects the language form), otherwise line text.
inline Input parse_input(const std::string& text) {
  auto b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw ParseError("empty input");
  if (text[b] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level JSON must be an object");
    if (j.contains("forbidden")) return parse_language_json(j);
    return parse_graph_json(j);
  }
  return parse_graph_text(text);
}

inline Input parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

// Round-trippable text rendering of a graph, matching the input format.
inline std::string graph_to_text(const LabeledGraph& g) {
  std::ostringstream out;
  out << "alphabet:";
  for (const std::string& s : g.alphabet().symbols) out << " " << s;
  out << "\nvertices:";
  for (const std::string& v : g.vertex_names()) out << " " << v;
  out << "\n";
  for (const Edge& e : g.edges())
    out << "edge " << g.vertex_name(e.src) << " " << g.vertex_name(e.dst) << " "
        << g.alphabet().name(e.label) << "\n";
  if (g.truncated()) out << "truncated\n";
  return out.str();
}

}  // namespace lga
