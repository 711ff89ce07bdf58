#include "shellkit/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace shellkit {

SimplicialComplex SimplicialComplex::from_facets(Universe universe, std::vector<Mask> facets) {
  for (Mask f : facets)
    if (!is_subset(f, universe.all())) throw PreconditionError("facet outside the universe");
  sort_size_lex(facets);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (!is_antichain(facets)) throw PreconditionError("facets must form an antichain");
  return SimplicialComplex(std::move(universe), std::move(facets));
}

SimplicialComplex SimplicialComplex::generated_by(Universe universe, std::vector<Mask> faces) {
  auto facets = maximal_elements(std::move(faces));
  return from_facets(std::move(universe), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_label_facets(const std::vector<std::vector<Label>>& facets,
                                                       const std::vector<Label>& extra_vertices) {
  std::vector<Label> all = extra_vertices;
  for (const auto& f : facets) all.insert(all.end(), f.begin(), f.end());
  Universe u(std::move(all));
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(u.mask_of(f));
  return from_facets(std::move(u), std::move(masks));
}

std::vector<std::vector<Label>> SimplicialComplex::label_facets() const {
  std::vector<std::vector<Label>> out;
  for (Mask f : facets_) out.push_back(universe_.labels_of(f));
  return out;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) throw PreconditionError("the void complex has no dimension");
  return popcount(facets_.back()) - 1;
}

bool SimplicialComplex::is_pure() const {
  return facets_.empty() || popcount(facets_.front()) == popcount(facets_.back());
}

bool SimplicialComplex::contains_face(Mask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return is_subset(face, f); });
}

Mask SimplicialComplex::cone_points() const {
  if (facets_.empty()) return 0;
  Mask m = universe_.all();
  for (Mask f : facets_) m &= f;
  return m;
}

bool SimplicialComplex::same_facets(const SimplicialComplex& other) const {
  auto a = label_facets();
  auto b = other.label_facets();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SimplicialComplex independence_complex(const Graph& g) {
  const std::size_t n = g.order();
  const Mask all = full_mask(n);
  std::vector<Mask> non_adjacent(n);
  for (std::size_t v = 0; v < n; ++v) non_adjacent[v] = all & ~g.adjacency(v) & ~bit(v);

  std::vector<Mask> facets;
  // Bron-Kerbosch with pivoting on the complement graph: R grows an
  // independent set, P are candidates, X are excluded vertices.
  auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0 && x == 0) {
      facets.push_back(r);
      return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (auto u : indices_of(p | x)) {
      const int c = popcount(p & non_adjacent[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (auto v : indices_of(p & ~non_adjacent[pivot])) {
      self(self, r | bit(v), p & non_adjacent[v], x & non_adjacent[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  expand(expand, 0, all, 0);
  return SimplicialComplex::from_facets(g.vertices(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, Mask face) {
  if (!d.contains_face(face)) throw PreconditionError("link: not a face of the complex");
  Universe u = d.universe().subset(d.universe().all() & ~face);
  std::vector<Mask> facets;
  for (Mask f : d.facets())
    if (is_subset(face, f)) facets.push_back(d.universe().translate(f & ~face, u));
  return SimplicialComplex::from_facets(std::move(u), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, const std::vector<Label>& face) {
  return link(d, d.universe().mask_of(face));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& d, int k) {
  if (d.is_void()) throw PreconditionError("pure_skeleton of the void complex");
  if (k < -1 || k > d.dimension())
    throw PreconditionError("pure_skeleton: dimension " + std::to_string(k) + " outside [-1, " +
                            std::to_string(d.dimension()) + "]");
  std::vector<Mask> faces;
  const int size = k + 1;
  for (Mask f : d.facets()) {
    if (popcount(f) < size) continue;
    if (popcount(f) == size) {
      faces.push_back(f);
      continue;
    }
    // All size-subsets of f.
    const auto idx = indices_of(f);
    const std::size_t m = idx.size();
    if (size == 0) {
      faces.push_back(0);
      continue;
    }
    for (Mask pick = full_mask(static_cast<std::size_t>(size));;) {
      Mask face = 0;
      for (auto i : indices_of(pick)) face |= bit(idx[i]);
      faces.push_back(face);
      const Mask low = pick & (~pick + 1);
      const Mask ripple = pick + low;
      if (ripple == 0 || ripple > full_mask(m)) break;
      pick = ripple | (((pick ^ ripple) >> 2) / low);
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex::from_facets(d.universe(), std::move(faces));
}

SimplicialComplex from_minimal_covers(const Clutter& c) {
  std::vector<Mask> facets;
  for (Mask cover : minimal_vertex_covers(c)) facets.push_back(c.vertices().all() & ~cover);
  return SimplicialComplex::from_facets(c.vertices(), std::move(facets));
}

SimplicialComplex disjoint_join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& l : a.universe().labels())
    if (b.universe().contains(l)) throw PreconditionError("disjoint_join: universes share vertex '" + l + "'");
  Universe u = a.universe().merged(b.universe());
  std::vector<Mask> facets;
  for (Mask f : a.facets())
    for (Mask h : b.facets()) facets.push_back(a.universe().translate(f, u) | b.universe().translate(h, u));
  return SimplicialComplex::from_facets(std::move(u), std::move(facets));
}

SimplicialComplex remove_vertices(const SimplicialComplex& d, Mask cone) {
  Universe u = d.universe().subset(d.universe().all() & ~cone);
  std::vector<Mask> facets;
  for (Mask f : d.facets()) facets.push_back(d.universe().translate(f & ~cone, u));
  return SimplicialComplex::generated_by(std::move(u), std::move(facets));
}

FacesByDimension all_faces(const SimplicialComplex& d, std::size_t universe_limit) {
  if (d.universe().size() > universe_limit)
    throw LimitExceeded("face enumeration: universe of " + std::to_string(d.universe().size()) +
                        " vertices exceeds the limit of " + std::to_string(universe_limit));
  if (d.is_void()) throw PreconditionError("face enumeration of the void complex");
  std::unordered_set<Mask> seen;
  for (Mask f : d.facets()) {
    Mask s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  FacesByDimension out(static_cast<std::size_t>(d.dimension()) + 2);
  for (Mask s : seen) out[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& layer : out) sort_lex(layer);
  return out;
}

}  // namespace shellkit
