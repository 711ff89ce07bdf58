#include "shellkit/clutter.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace shellkit {

Clutter Clutter::from_edges(Universe vertices, std::vector<Mask> edges) {
  for (Mask e : edges) {
    if (e == 0) throw PreconditionError("clutter edges must be nonempty");
    if (!is_subset(e, vertices.all())) throw PreconditionError("clutter edge outside the vertex set");
  }
  sort_lex(edges);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!is_antichain(edges)) throw PreconditionError("clutter edges must form an antichain");
  return Clutter(std::move(vertices), std::move(edges));
}

Clutter Clutter::from_label_edges(const std::vector<std::vector<Label>>& edges,
                                  const std::vector<Label>& extra_vertices) {
  std::vector<Label> all = extra_vertices;
  for (const auto& e : edges) all.insert(all.end(), e.begin(), e.end());
  Universe u(std::move(all));
  std::vector<Mask> masks;
  for (const auto& e : edges) masks.push_back(u.mask_of(e));
  return from_edges(std::move(u), std::move(masks));
}

Clutter Clutter::minimalized(Universe vertices, std::vector<Mask> sets) {
  auto edges = minimal_elements(std::move(sets));
  return from_edges(std::move(vertices), std::move(edges));
}

Mask Clutter::support() const {
  Mask m = 0;
  for (Mask e : edges_) m |= e;
  return m;
}

std::vector<std::vector<Label>> Clutter::label_edges() const {
  std::vector<std::vector<Label>> out;
  for (Mask e : edges_) out.push_back(vertices_.labels_of(e));
  return out;
}

Clutter graph_clutter(const Graph& g) {
  std::vector<Mask> edges;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (auto j : indices_of(g.adjacency(i) & ~full_mask(i + 1))) edges.push_back(bit(i) | bit(j));
  return Clutter::from_edges(g.vertices(), std::move(edges));
}

std::vector<Mask> minimal_vertex_covers(const Clutter& c) {
  const auto& edges = c.edges();
  std::vector<Mask> found;
  // Branch on the first uncovered edge; every minimal cover is reached.
  std::function<void(Mask)> search = [&](Mask chosen) {
    auto uncovered = std::find_if(edges.begin(), edges.end(), [chosen](Mask e) { return (e & chosen) == 0; });
    if (uncovered == edges.end()) {
      found.push_back(chosen);
      return;
    }
    for (auto v : indices_of(*uncovered)) {
      const Mask next = chosen | bit(v);
      // Prune: a superset of a cover already found cannot be minimal.
      if (std::any_of(found.begin(), found.end(), [next](Mask f) { return is_subset(f, next); })) continue;
      search(next);
    }
  };
  search(0);
  return minimal_elements(std::move(found));
}

std::optional<Clutter> minor(const Clutter& c, Mask zeros, Mask ones) {
  if (zeros & ones) throw PreconditionError("minor: zeros and ones overlap");
  if (!is_subset(zeros | ones, c.vertices().all())) throw PreconditionError("minor: substitution outside vertex set");
  std::vector<Mask> shrunk;
  for (Mask e : c.edges()) {
    if (e & zeros) continue;
    const Mask rest = e & ~ones;
    if (rest == 0) return std::nullopt;
    shrunk.push_back(rest);
  }
  if (shrunk.empty()) return std::nullopt;
  const Mask keep = c.vertices().all() & ~(zeros | ones);
  Universe sub = c.vertices().subset(keep);
  for (Mask& e : shrunk) e = c.vertices().translate(e, sub);
  return Clutter::minimalized(std::move(sub), std::move(shrunk));
}

std::optional<Clutter> minor(const Clutter& c, const std::vector<Label>& zeros, const std::vector<Label>& ones) {
  return minor(c, c.vertices().mask_of(zeros), c.vertices().mask_of(ones));
}

Mask free_vertex_mask(const Clutter& c) {
  Mask once = 0;
  Mask twice = 0;
  for (Mask e : c.edges()) {
    twice |= once & e;
    once |= e;
  }
  return once & ~twice;
}

std::vector<Label> free_vertices(const Clutter& c) { return c.vertices().labels_of(free_vertex_mask(c)); }

namespace {

struct EdgeKey {
  std::vector<Label> flat;
  bool operator<(const EdgeKey& o) const { return flat < o.flat; }
};

// Free-vertex existence and the set of further minors depend only on the
// labelled edges, so that is the memo key.
EdgeKey key_of(const Clutter& c) {
  EdgeKey k;
  for (Mask e : c.edges()) {
    for (auto& l : c.vertices().labels_of(e)) k.flat.push_back(l);
    k.flat.emplace_back("|");
  }
  return k;
}

}  // namespace

FreeVertexPropertyResult has_free_vertex_property(const Clutter& c, std::size_t vertex_limit) {
  if (c.vertices().size() > vertex_limit)
    throw LimitExceeded("free vertex property: " + std::to_string(c.vertices().size()) +
                        " vertices exceed the limit of " + std::to_string(vertex_limit));
  std::set<EdgeKey> visited;
  std::optional<Clutter> witness;
  // Every minor is reachable by single-variable substitutions through valid minors.
  std::function<bool(const Clutter&)> visit = [&](const Clutter& m) {
    if (!visited.insert(key_of(m)).second) return true;
    if (free_vertex_mask(m) == 0) {
      witness = m;
      return false;
    }
    for (auto v : indices_of(m.support())) {
      for (int value = 0; value < 2; ++value) {
        auto next = value == 0 ? minor(m, bit(v), 0) : minor(m, 0, bit(v));
        if (next && !visit(*next)) return false;
      }
    }
    return true;
  };
  FreeVertexPropertyResult result;
  if (c.edges().empty()) {
    result.holds = true;
    return result;
  }
  result.holds = visit(c);
  result.witness = std::move(witness);
  return result;
}

TotalBalanceResult is_totally_balanced(const Clutter& c, std::size_t limit) {
  const std::size_t n = c.vertices().size();
  const std::size_t q = c.edges().size();
  if (n > limit || q > limit)
    throw LimitExceeded("totally balanced check: matrix " + std::to_string(n) + "x" + std::to_string(q) +
                        " exceeds the limit of " + std::to_string(limit));
  const auto& edges = c.edges();
  TotalBalanceResult result;
  const std::size_t max_order = std::min(n, q);
  for (std::size_t k = 3; k <= max_order; ++k) {
    for (Mask cols = full_mask(k); cols <= full_mask(q); ) {
      // Rows with exactly two 1s among the chosen columns.
      std::vector<std::size_t> candidates;
      for (std::size_t r = 0; r < n; ++r) {
        int ones = 0;
        for (auto j : indices_of(cols)) ones += (edges[j] >> r) & 1;
        if (ones == 2) candidates.push_back(r);
      }
      if (candidates.size() >= k) {
        const std::size_t m = candidates.size();
        for (Mask pick = full_mask(k); pick <= full_mask(m); ) {
          Mask rows = 0;
          for (auto i : indices_of(pick)) rows |= bit(candidates[i]);
          bool regular = true;
          for (auto j : indices_of(cols))
            if (popcount(edges[j] & rows) != 2) { regular = false; break; }
          if (regular) {
            result.holds = false;
            result.rows = c.vertices().labels_of(rows);
            result.columns = indices_of(cols);
            return result;
          }
          // Next subset with the same popcount (Gosper's hack).
          const Mask low = pick & (~pick + 1);
          const Mask ripple = pick + low;
          if (ripple == 0 || ripple > full_mask(m)) break;
          pick = ripple | (((pick ^ ripple) >> 2) / low);
        }
      }
      const Mask low = cols & (~cols + 1);
      const Mask ripple = cols + low;
      if (ripple == 0 || ripple > full_mask(q)) break;
      cols = ripple | (((cols ^ ripple) >> 2) / low);
    }
  }
  return result;
}

namespace {

std::optional<std::size_t> f_leaf_witness(std::span<const Mask> edges, std::size_t e) {
  for (std::size_t h = 0; h < edges.size(); ++h) {
    if (h == e) continue;
    const Mask bound = edges[e] & edges[h];
    bool ok = true;
    for (std::size_t o = 0; o < edges.size() && ok; ++o)
      if (o != e && !is_subset(edges[e] & edges[o], bound)) ok = false;
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_f_leaf(std::span<const Mask> edges) {
  if (edges.size() == 1) return 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (f_leaf_witness(edges, e)) return e;
  return std::nullopt;
}

}  // namespace

std::optional<FLeaf> find_f_leaf(const Clutter& c) {
  const auto& edges = c.edges();
  if (edges.empty()) throw PreconditionError("find_f_leaf: clutter has no edges");
  if (edges.size() == 1) return FLeaf{edges[0], std::nullopt};
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (auto h = f_leaf_witness(edges, e)) return FLeaf{edges[e], edges[*h]};
  return std::nullopt;
}

bool is_f_forest(const Clutter& c, ForestCheck mode, std::size_t edge_limit) {
  const auto& edges = c.edges();
  if (edges.empty()) return true;
  if (mode == ForestCheck::greedy) {
    std::vector<Mask> rest = edges;
    while (!rest.empty()) {
      auto leaf = first_f_leaf(rest);
      if (!leaf) return false;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*leaf));
    }
    return true;
  }
  if (edges.size() > edge_limit)
    throw LimitExceeded("f-forest check: " + std::to_string(edges.size()) + " edges exceed the limit of " +
                        std::to_string(edge_limit));
  std::vector<Mask> sub;
  for (Mask pick = 1; pick <= full_mask(edges.size()); ++pick) {
    sub.clear();
    for (auto i : indices_of(pick)) sub.push_back(edges[i]);
    if (!first_f_leaf(sub)) return false;
  }
  return true;
}

std::vector<std::vector<int>> incidence_matrix(const Clutter& c) {
  std::vector<std::vector<int>> a(c.vertices().size(), std::vector<int>(c.edges().size(), 0));
  for (std::size_t j = 0; j < c.edges().size(); ++j)
    for (auto i : indices_of(c.edges()[j])) a[i][j] = 1;
  return a;
}

}  // namespace shellkit
