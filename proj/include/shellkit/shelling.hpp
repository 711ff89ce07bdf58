#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shellkit/clutter.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/graph.hpp"

namespace shellkit {

/// For the pair i < j of the order: `vertex` ∈ F_j \ F_i and F_j \ F_ell = {vertex}
/// with ell < j. Indices are 0-based; `vertex` indexes the certificate universe.
struct ShellingWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t vertex = 0;
  std::size_t ell = 0;
  friend bool operator==(const ShellingWitness&, const ShellingWitness&) = default;
};

/// A facet order together with one witness per pair. `witnesses` is complete
/// and ordered by j, then i, so pair (i, j) sits at j(j-1)/2 + i.
struct ShellingCertificate {
  Universe universe;
  std::vector<Mask> order;
  std::vector<ShellingWitness> witnesses;

  const ShellingWitness& witness(std::size_t i, std::size_t j) const { return witnesses[j * (j - 1) / 2 + i]; }
  std::vector<std::vector<Label>> label_order() const;
  friend bool operator==(const ShellingCertificate&, const ShellingCertificate&) = default;
};

struct ShellingCheck {
  std::optional<ShellingCertificate> certificate;
  /// First failing pair (i, j), smallest i then smallest j.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  bool ok() const { return certificate.has_value(); }
};

/// Throws PreconditionError unless `order` is a permutation of d's facets.
ShellingCheck verify_shelling(const SimplicialComplex& d, const std::vector<Mask>& order);
ShellingCheck verify_shelling(const SimplicialComplex& d, const std::vector<std::vector<Label>>& order);

/// Re-checks every witness equation and witness completeness.
bool recheck_certificate(const ShellingCertificate& c);
/// recheck_certificate plus: the order is a permutation of d's facets.
bool certifies(const ShellingCertificate& c, const SimplicialComplex& d);

inline constexpr std::size_t kDefaultFacetLimit = 20;

/// Backtracking over facet prefixes in canonical order; the first shelling
/// found is returned.
std::optional<ShellingCertificate> find_shelling_bruteforce(const SimplicialComplex& d,
                                                            std::size_t facet_limit = kDefaultFacetLimit);

/// Product order F_1∪H_1, …, F_1∪H_s, F_2∪H_1, … for complexes on disjoint vertex sets.
ShellingCertificate shell_union(const ShellingCertificate& first, const ShellingCertificate& second);

/// The facets containing x, minus x, in inherited order. A shelling of lk(x).
ShellingCertificate restrict_shelling_to_link(const ShellingCertificate& c, const Label& x);

/// Facets H whose complement cover avoids `avoid` (i.e. avoid ⊆ H), in inherited order.
ShellingCertificate restrict_shelling_avoiding(const ShellingCertificate& c, const std::vector<Label>& avoid);

/// Adds the vertices `cone` (new to the universe) to every facet.
ShellingCertificate adjoin_cone(const ShellingCertificate& c, const std::vector<Label>& cone);

struct RecursionStep {
  std::size_t depth = 0;
  std::string action;
  std::vector<Label> vertices;
};

struct BipartiteShelling {
  std::optional<ShellingCertificate> certificate;
  std::vector<RecursionStep> trace;
  /// Connected subproblem without a degree-1 vertex.
  std::optional<Graph> failing_node;
};

/// Degree-1 recursion for bipartite graphs. Isolated vertices are coned off and
/// components composed with shell_union. A failure disproves shellability.
/// Throws PreconditionError if g is not bipartite.
BipartiteShelling shell_bipartite(const Graph& g);

/// Simplicial-vertex recursion. Throws PreconditionError if g is not chordal.
ShellingCertificate shell_chordal(const Graph& g);

struct FreeVertexShelling {
  std::optional<ShellingCertificate> certificate;
  std::vector<RecursionStep> trace;
  /// Minor without a free vertex reached by the recursion. Inconclusive about
  /// shellability: only this recursion path was explored.
  std::optional<Clutter> failing_minor;
};

/// Free-vertex recursion on the x=1 and x=0 minors. The certificate shells Δ_C.
FreeVertexShelling shell_free_vertex_clutter(const Clutter& c);

}  // namespace shellkit
