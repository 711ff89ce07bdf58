#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shellkit/common.hpp"

namespace shellkit {

using Edge = std::pair<Label, Label>;

/// Simple undirected graph over string labels. Immutable value: every
/// operation returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Endpoints of `edges` are declared automatically. Loops are rejected.
  static Graph from_edges(std::vector<Label> vertices, const std::vector<Edge>& edges);

  const Universe& vertices() const { return universe_; }
  std::size_t order() const { return universe_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return universe_.empty(); }

  bool has_vertex(std::string_view label) const { return universe_.contains(label); }
  bool adjacent(std::string_view a, std::string_view b) const;
  std::size_t degree(std::string_view label) const;

  /// Neighbor mask of the vertex at index `i`.
  Mask adjacency(std::size_t i) const { return adj_[i]; }
  /// Sorted edges, each with the smaller label first.
  std::vector<Edge> edges() const;

  /// Subgraph induced on the vertices in `keep`.
  Graph induced(Mask keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(Universe universe, std::vector<Mask> adj) : universe_(std::move(universe)), adj_(std::move(adj)) {}

  Universe universe_;
  std::vector<Mask> adj_;
};

struct Bipartition {
  std::vector<Label> first;
  std::vector<Label> second;
};

std::vector<Label> neighbors(const Graph& g, const Label& x);

/// G \ ({x} ∪ N(x)).
Graph delete_closed_neighborhood(const Graph& g, const Label& x);

/// G \ S.
Graph delete_vertices(const Graph& g, const std::vector<Label>& s);

/// Suffix appended to a vertex label to name its whisker tip.
inline constexpr std::string_view kWhiskerSuffix = "·w";

/// Label given to the whisker tip at `x` when added to `g`.
Label whisker_tip(const Graph& g, const Label& x);

/// G ∪ W_G(S): one new degree-1 vertex per element of S.
Graph add_whiskers(const Graph& g, const std::vector<Label>& s);

/// 2-coloring by BFS from the smallest uncolored label; isolated vertices land
/// in `first`. Absent when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_complete(const Graph& g);

/// Smallest-labelled vertex outside `avoid` whose neighborhood is a clique.
std::optional<Label> find_simplicial_vertex(const Graph& g, const std::vector<Label>& avoid = {});

/// Perfect elimination ordering, built by repeatedly removing the smallest
/// simplicial vertex; absent iff g is not chordal.
std::optional<std::vector<Label>> is_chordal(const Graph& g);

/// (x, y) for every degree-1 vertex x with unique neighbor y, sorted by x.
std::vector<Edge> degree_one_vertices(const Graph& g);

std::vector<Label> isolated_vertices(const Graph& g);

/// Ordered by smallest vertex label.
std::vector<Graph> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

namespace families {

/// Vertices "1".."n".
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
/// Sides "x1".."xm" and "y1".."yn".
Graph complete_bipartite(std::size_t m, std::size_t n);
/// The ten-vertex bipartite graph with acyclic but non-transitive digraph.
Graph acyclic_not_scm_example();

}  // namespace families

}  // namespace shellkit
