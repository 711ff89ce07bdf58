#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "shellkit/clutter.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/graph.hpp"

namespace testing_helpers {

using shellkit::Label;
using LabelSets = std::vector<std::vector<Label>>;

/// "a-b b-c" style edge list; lone tokens are isolated vertices.
inline shellkit::Graph G(const std::string& text) {
  std::istringstream in(text);
  std::vector<Label> vertices;
  std::vector<shellkit::Edge> edges;
  for (std::string tok; in >> tok;) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) {
      vertices.push_back(tok);
    } else {
      edges.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
    }
  }
  return shellkit::Graph::from_edges(vertices, edges);
}

/// "abc cd" style sets of single-character labels.
inline LabelSets sets(const std::string& text) {
  std::istringstream in(text);
  LabelSets out;
  for (std::string tok; in >> tok;) {
    std::vector<Label> s;
    if (tok != "0")
      for (char ch : tok) s.emplace_back(1, ch);
    out.push_back(s);
  }
  return out;
}

inline shellkit::Clutter C(const std::string& text) { return shellkit::Clutter::from_label_edges(sets(text)); }

inline shellkit::SimplicialComplex K(const std::string& text) {
  return shellkit::SimplicialComplex::from_label_facets(sets(text));
}

}  // namespace testing_helpers
