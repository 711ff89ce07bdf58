#pragma once

#include <optional>
#include <vector>

#include "shellkit/common.hpp"
#include "shellkit/graph.hpp"

namespace shellkit {

/// Simple hypergraph: an antichain of nonempty edges over a vertex set.
/// Edges are kept in lexicographic order of their sorted labels.
class Clutter {
 public:
  Clutter() = default;

  /// Throws PreconditionError if an edge is empty, outside the universe, or
  /// contains another edge.
  static Clutter from_edges(Universe vertices, std::vector<Mask> edges);
  static Clutter from_label_edges(const std::vector<std::vector<Label>>& edges,
                                  const std::vector<Label>& extra_vertices = {});
  /// Keeps only the inclusion-minimal sets (the minimal generators).
  static Clutter minimalized(Universe vertices, std::vector<Mask> sets);

  const Universe& vertices() const { return vertices_; }
  const std::vector<Mask>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  Mask support() const;

  std::vector<std::vector<Label>> label_edges() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  Clutter(Universe v, std::vector<Mask> e) : vertices_(std::move(v)), edges_(std::move(e)) {}

  Universe vertices_;
  std::vector<Mask> edges_;
};

Clutter graph_clutter(const Graph& g);

/// All inclusion-minimal transversals, (size, lex) order. The clutter with no
/// edges has the single cover ∅.
std::vector<Mask> minimal_vertex_covers(const Clutter& c);

/// Substitute x=0 for `zeros` and x=1 for `ones`, then re-minimalize. Absent
/// when the result is the zero ideal (no edges) or the unit ideal (an empty edge).
std::optional<Clutter> minor(const Clutter& c, Mask zeros, Mask ones);
std::optional<Clutter> minor(const Clutter& c, const std::vector<Label>& zeros, const std::vector<Label>& ones);

/// Vertices lying in exactly one edge, sorted.
std::vector<Label> free_vertices(const Clutter& c);
Mask free_vertex_mask(const Clutter& c);

struct FreeVertexPropertyResult {
  bool holds = false;
  /// A minor without free vertices, when `holds` is false.
  std::optional<Clutter> witness;
  explicit operator bool() const { return holds; }
};

inline constexpr std::size_t kDefaultFreeVertexLimit = 12;

FreeVertexPropertyResult has_free_vertex_property(const Clutter& c,
                                                  std::size_t vertex_limit = kDefaultFreeVertexLimit);

struct TotalBalanceResult {
  bool holds = true;
  /// Forbidden square submatrix: vertex rows and edge columns (edge indices).
  std::vector<Label> rows;
  std::vector<std::size_t> columns;
  explicit operator bool() const { return holds; }
};

inline constexpr std::size_t kDefaultMatrixLimit = 14;

TotalBalanceResult is_totally_balanced(const Clutter& c, std::size_t limit = kDefaultMatrixLimit);

struct FLeaf {
  Mask edge = 0;
  /// Absent only when `edge` is the sole edge.
  std::optional<Mask> witness;
};

/// Smallest f-leaf in edge order. Throws PreconditionError on an edgeless clutter.
std::optional<FLeaf> find_f_leaf(const Clutter& c);

enum class ForestCheck { exhaustive, greedy };

inline constexpr std::size_t kDefaultForestEdgeLimit = 12;

bool is_f_forest(const Clutter& c, ForestCheck mode = ForestCheck::exhaustive,
                 std::size_t edge_limit = kDefaultForestEdgeLimit);

/// Rows = vertices, columns = edges, both in canonical order.
std::vector<std::vector<int>> incidence_matrix(const Clutter& c);

}  // namespace shellkit
