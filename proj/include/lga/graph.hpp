#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lga/bitset.hpp"
#include "lga/core.hpp"

namespace lga {

using Letter = std::uint32_t;
// w[0] is read first; the empty vector is the empty word.
using Word = std::vector<Letter>;

struct Alphabet {
  std::vector<std::string> symbols;  // order as declared in the input
  std::map<std::string, Letter> index;

  static Alphabet of(std::vector<std::string> syms) {
    Alphabet a;
    if (syms.empty()) throw ValidationError("alphabet is empty");
    for (auto& s : syms) {
      if (s.empty()) throw ValidationError("empty alphabet symbol");
      if (a.index.count(s)) throw ValidationError("duplicate alphabet symbol '" + s + "'");
      a.index.emplace(s, static_cast<Letter>(a.symbols.size()));
      a.symbols.push_back(s);
    }
    return a;
  }

  int size() const { return static_cast<int>(symbols.size()); }
  bool has(const std::string& s) const { return index.count(s) != 0; }

  Letter id(const std::string& s) const {
    auto it = index.find(s);
    if (it == index.end()) throw ValidationError("letter '" + s + "' is not in the alphabet");
    return it->second;
  }

  const std::string& name(Letter a) const { return symbols.at(a); }

  bool single_char() const {
    for (const auto& s : symbols)
      if (s.size() != 1) return false;
    return true;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols == b.symbols; }
};

// Words render as plain concatenation when every symbol is a single character,
// otherwise as space-separated symbols. Parsing accepts the same two shapes.
inline std::string word_str(const Alphabet& alpha, const Word& w) {
  std::string out;
  bool tight = alpha.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!tight && i) out += ' ';
    out += alpha.name(w[i]);
  }
  return out;
}

inline Word parse_word(const Alphabet& alpha, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (alpha.has(tok)) {
      w.push_back(alpha.id(tok));
      continue;
    }
    for (char c : tok) w.push_back(alpha.id(std::string(1, c)));
  }
  return w;
}

struct Edge {
  int src;
  int dst;
  Letter label;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite directed multigraph with a surjective edge labeling. Immutable after
// construction. `truncated` marks windows of larger objects: it relaxes the
// no-sink/no-source and surjectivity requirements but nothing else.
class LabeledGraph {
 public:
  LabeledGraph(Alphabet alpha, std::vector<std::string> names, std::vector<Edge> edges,
               bool truncated = false)
      : alpha_(std::move(alpha)), names_(std::move(names)), edges_(std::move(edges)),
        truncated_(truncated) {
    if (names_.empty()) throw ValidationError("graph has no vertices");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (names_[i].empty()) throw ValidationError("empty vertex name");
      if (!vindex_.emplace(names_[i], i).second)
        throw ValidationError("duplicate vertex '" + names_[i] + "'");
    }
    int n = vertex_count();
    for (const Edge& e : edges_) {
      if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
        throw ValidationError("edge endpoint out of range");
      if (e.label >= static_cast<Letter>(alpha_.size()))
        throw ValidationError("edge label out of range");
    }
    // canonical edge order; parallel duplicates are kept (multigraph)
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
    });

    fwd_.assign(n, std::vector<VertexSet>(alpha_.size(), VertexSet(n)));
    bwd_.assign(n, std::vector<VertexSet>(alpha_.size(), VertexSet(n)));
    std::vector<int> outdeg(n, 0), indeg(n, 0), used(alpha_.size(), 0);
    for (const Edge& e : edges_) {
      fwd_[e.src][e.label].set(e.dst);
      bwd_[e.dst][e.label].set(e.src);
      ++outdeg[e.src];
      ++indeg[e.dst];
      used[e.label] = 1;
    }
    if (!truncated_) {
      for (int v = 0; v < n; ++v) {
        if (outdeg[v] == 0) throw ValidationError("vertex " + names_[v] + " is a sink");
        if (indeg[v] == 0) throw ValidationError("vertex " + names_[v] + " is a source");
      }
      for (int a = 0; a < alpha_.size(); ++a)
        if (!used[a])
          throw ValidationError("letter '" + alpha_.symbols[a] + "' labels no edge");
    }
  }

  const Alphabet& alphabet() const { return alpha_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(v); }

  int vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) throw ValidationError("unknown vertex '" + name + "'");
    return it->second;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  bool truncated() const { return truncated_; }

  const VertexSet& heads(int v, Letter a) const { return fwd_[v][a]; }
  const VertexSet& tails(int v, Letter a) const { return bwd_[v][a]; }

  // one-letter forward image {head(e) : tail(e) in A, label(e) = a}
  VertexSet step(const VertexSet& A, Letter a) const {
    VertexSet out(vertex_count());
    for (int v : A.elements()) out |= fwd_[v][a];
    return out;
  }

  // one-letter backward image {tail(e) : head(e) in A, label(e) = a}
  VertexSet co_step(const VertexSet& A, Letter a) const {
    VertexSet out(vertex_count());
    for (int v : A.elements()) out |= bwd_[v][a];
    return out;
  }

  VertexSet full_set() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  std::string set_str(const VertexSet& s) const {
    std::string out = "{";
    bool first = true;
    for (int v : s.elements()) {
      if (!first) out += ",";
      out += names_[v];
      first = false;
    }
    return out + "}";
  }

  json set_json(const VertexSet& s) const {
    json arr = json::array();
    for (int v : s.elements()) arr.push_back(names_[v]);
    return arr;
  }

 private:
  Alphabet alpha_;
  std::vector<std::string> names_;
  std::map<std::string, int> vindex_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexSet>> fwd_, bwd_;  // [vertex][letter]
  bool truncated_;
};

// Finite presentation of a shift language by forbidden factors. An empty list is
// the full shift over the alphabet.
struct LanguageSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;  // sorted by (length, lex), deduplicated, each nonempty

  static LanguageSpec make(Alphabet alpha, std::vector<Word> forbidden) {
    LanguageSpec s{std::move(alpha), std::move(forbidden)};
    for (const Word& w : s.forbidden) {
      if (w.empty()) throw ValidationError("forbidden word is empty");
      for (Letter a : w)
        if (a >= static_cast<Letter>(s.alphabet.size()))
          throw ValidationError("forbidden word letter out of range");
    }
    std::sort(s.forbidden.begin(), s.forbidden.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    s.forbidden.erase(std::unique(s.forbidden.begin(), s.forbidden.end()), s.forbidden.end());
    return s;
  }

  int max_forbidden_length() const {
    std::size_t m = 0;
    for (const Word& w : forbidden) m = std::max(m, w.size());
    return static_cast<int>(m);
  }
};

using Input = std::variant<LabeledGraph, LanguageSpec>;

inline json graph_to_json(const LabeledGraph& g) {
  json out;
  out["alphabet"] = g.alphabet().symbols;
  out["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(json::array(
        {g.vertex_name(e.src), g.vertex_name(e.dst), g.alphabet().name(e.label)}));
  out["edges"] = edges;
  if (g.truncated()) out["truncated"] = true;
  return out;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string graph_to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (const auto& name : g.vertex_names()) out << "  " << dot_quote(name) << ";\n";
  for (const Edge& e : g.edges())
    out << "  " << dot_quote(g.vertex_name(e.src)) << " -> " << dot_quote(g.vertex_name(e.dst))
        << " [label=" << dot_quote(g.alphabet().name(e.label)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lga
