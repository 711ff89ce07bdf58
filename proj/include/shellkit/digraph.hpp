#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/graph.hpp"
#include "shellkit/homology.hpp"

namespace shellkit {

/// Bipartite graph with a perfect matching {x_i, y_i} pairing its two sides.
struct MatchedBipartite {
  Graph graph;
  /// (x_i, y_i), sorted by x_i.
  std::vector<Edge> pairing;

  std::vector<Label> x_side() const;
  std::vector<Label> y_side() const;
  std::size_t g() const { return pairing.size(); }
};

enum class MatchingErrorKind { not_bipartite, unequal_sides, no_perfect_matching, pairing_not_matching };

class MatchingError : public PreconditionError {
 public:
  MatchingError(MatchingErrorKind kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
  MatchingErrorKind kind() const { return kind_; }

 private:
  MatchingErrorKind kind_;
};

/// Validates `pairing` (x = y pairs), or finds a perfect matching between the
/// two sides of the BFS bipartition by augmenting paths from the smallest labels.
MatchedBipartite check_conditions(const Graph& g, const std::optional<std::vector<Edge>>& pairing = std::nullopt);

/// Every perfect matching of a bipartite graph whose x side is `x_side`.
std::vector<std::vector<Edge>> all_perfect_matchings(const Graph& g, const std::vector<Label>& x_side);

class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<Label> vertices, const std::vector<Edge>& arcs);

  const Universe& vertices() const { return vertices_; }
  Mask out(std::size_t i) const { return out_[i]; }
  Mask in(std::size_t i) const;
  bool has_arc(std::string_view from, std::string_view to) const;
  std::vector<Edge> arcs() const;
  std::size_t arc_count() const;

 private:
  Universe vertices_;
  std::vector<Mask> out_;
};

/// (x_i, x_j) is an arc iff i != j and {x_i, y_j} is an edge.
Digraph build_digraph(const MatchedBipartite& m);

struct AcyclicityResult {
  /// Topological order (smallest available label first) when acyclic.
  std::optional<std::vector<Label>> order;
  /// A directed cycle x_1 -> x_2 -> ... -> x_1 otherwise.
  std::optional<std::vector<Label>> cycle;
  bool acyclic() const { return order.has_value(); }
};

AcyclicityResult is_acyclic(const Digraph& d);

struct TransitivityResult {
  bool holds = true;
  /// (x_i, x_j, x_k) with both arcs present and (x_i, x_k) missing.
  std::optional<std::array<Label, 3>> failing_triple;
  explicit operator bool() const { return holds; }
};

TransitivityResult is_transitive(const Digraph& d);

struct CmClassification {
  bool cohen_macaulay = false;
  std::string reason;
  AcyclicityResult acyclicity;
  TransitivityResult transitivity;
};

/// Cohen-Macaulay iff the digraph is acyclic and transitive.
CmClassification classify_cm_bipartite(const MatchedBipartite& m);

struct AcyclicityProbe {
  bool sequentially_cm = false;
  bool acyclic = false;
  /// sequentially CM ⇒ acyclic.
  bool implication_holds() const { return !sequentially_cm || acyclic; }
};

AcyclicityProbe seq_cm_implies_acyclic_probe(const MatchedBipartite& m, const FieldSpec& field = FieldSpec::rationals(),
                                             std::size_t universe_limit = kDefaultUniverseLimit);

struct SinkSourceResult {
  bool holds = true;
  std::optional<Label> offending;
  explicit operator bool() const { return holds; }
};

/// For trees: the digraph is a tree and each vertex is a source or a sink.
/// Throws PreconditionError if the graph is not a tree.
SinkSourceResult tree_sink_source_check(const MatchedBipartite& m);

}  // namespace shellkit
