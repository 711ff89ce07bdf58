#pragma once

#include <vector>

#include "shellkit/clutter.hpp"
#include "shellkit/common.hpp"
#include "shellkit/graph.hpp"

namespace shellkit {

/// Simplicial complex given by its facets over a vertex universe.
///
/// Facets are an antichain stored in (size, lex) order. `facets() == {0}` is
/// the complex {∅}; an empty facet list is the void complex. Universe labels
/// need not all occur in a facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Throws PreconditionError unless `facets` is an antichain inside `universe`.
  static SimplicialComplex from_facets(Universe universe, std::vector<Mask> facets);
  /// Complex generated by `faces` (non-maximal ones are dropped).
  static SimplicialComplex generated_by(Universe universe, std::vector<Mask> faces);
  static SimplicialComplex from_label_facets(const std::vector<std::vector<Label>>& facets,
                                             const std::vector<Label>& extra_vertices = {});

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  std::vector<std::vector<Label>> label_facets() const;

  bool is_void() const { return facets_.empty(); }
  /// Largest facet size minus one. Throws PreconditionError on the void complex.
  int dimension() const;
  bool is_pure() const;
  bool contains_face(Mask face) const;
  /// Vertices lying in every facet.
  Mask cone_points() const;

  /// Same facets as label sets, universes ignored.
  bool same_facets(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(Universe u, std::vector<Mask> f) : universe_(std::move(u)), facets_(std::move(f)) {}

  Universe universe_;
  std::vector<Mask> facets_;
};

/// Facets are the maximal independent sets, found by a pivoting
/// Bron-Kerbosch recursion on the complement graph.
SimplicialComplex independence_complex(const Graph& g);

/// lk(F) = {H : H ∪ F ∈ Δ, H ∩ F = ∅}; universe(Δ) \ F.
SimplicialComplex link(const SimplicialComplex& d, Mask face);
SimplicialComplex link(const SimplicialComplex& d, const std::vector<Label>& face);

/// Δ^[k]: subcomplex generated by the k-dimensional faces, for -1 <= k <= dim Δ.
SimplicialComplex pure_skeleton(const SimplicialComplex& d, int k);

/// Δ_C: facets are the complements of the minimal vertex covers.
SimplicialComplex from_minimal_covers(const Clutter& c);

/// Facets F ∪ H over disjoint universes.
SimplicialComplex disjoint_join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Δ with the vertices in `cone` removed from every facet and the universe.
SimplicialComplex remove_vertices(const SimplicialComplex& d, Mask cone);

inline constexpr std::size_t kDefaultUniverseLimit = 24;

/// faces[i] holds the faces of dimension i-1 in lex order; faces[0] == {∅}.
using FacesByDimension = std::vector<std::vector<Mask>>;

/// Every face of a nonvoid complex, grouped by dimension.
FacesByDimension all_faces(const SimplicialComplex& d, std::size_t universe_limit = kDefaultUniverseLimit);

}  // namespace shellkit
