#include "shellkit/generators.hpp"

#include <algorithm>

namespace shellkit::gen {

namespace {

std::vector<Label> numbered(std::string_view prefix, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Graph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  const auto xs = numbered("x", a);
  const auto ys = numbered("y", b);
  std::vector<Edge> edges;
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (coin(rng)) edges.emplace_back(x, y);
  return Graph::from_edges(concat(xs, ys), edges);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  const auto vs = numbered("v", n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(vs[i], vs[j]);
  return Graph::from_edges(vs, edges);
}

Graph random_chordal(std::size_t n, Rng& rng) {
  const auto vs = numbered("v", n);
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> attach;
    if (!cliques.empty()) {
      const auto& k = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
      std::bernoulli_distribution coin(0.6);
      for (auto u : k)
        if (coin(rng)) attach.push_back(u);
    }
    for (auto u : attach) edges.emplace_back(vs[u], vs[v]);
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  return Graph::from_edges(vs, edges);
}

Clutter random_clutter(std::size_t n, std::size_t max_edges, Rng& rng) {
  const auto vs = numbered("", n);
  const Universe u(vs);
  std::uniform_int_distribution<Mask> pick(1, full_mask(n));
  std::uniform_int_distribution<std::size_t> count(1, max_edges);
  std::vector<Mask> edges;
  const auto target = count(rng);
  for (std::size_t attempt = 0; edges.size() < target && attempt < 50 * target; ++attempt) {
    const Mask e = pick(rng);
    const bool comparable = std::any_of(edges.begin(), edges.end(),
                                        [&](Mask f) { return is_subset(e, f) || is_subset(f, e); });
    if (!comparable) edges.push_back(e);
  }
  return Clutter::from_edges(u, edges);
}

Clutter random_f_forest(std::size_t max_vertices, std::size_t max_edges, Rng& rng) {
  const auto vs = numbered("", max_vertices);
  const Universe u(vs);
  std::uniform_int_distribution<std::size_t> edge_count(1, max_edges);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const auto target = edge_count(rng);
    std::vector<Mask> edges;
    std::size_t used = 0;
    auto fresh = [&](std::size_t k) {
      Mask m = 0;
      for (std::size_t t = 0; t < k && used < max_vertices; ++t) m |= bit(used++);
      return m;
    };
    edges.push_back(fresh(std::uniform_int_distribution<std::size_t>(1, 3)(rng)));
    while (edges.size() < target && used < max_vertices) {
      const Mask w = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      Mask shared = 0;
      for (auto v : indices_of(w))
        if (coin(rng)) shared |= bit(v);
      if (shared == w) shared &= shared - 1;
      edges.push_back(shared | fresh(std::uniform_int_distribution<std::size_t>(1, 2)(rng)));
    }
    const auto c = Clutter::from_edges(u.subset(full_mask(used)), edges);
    if (is_f_forest(c, ForestCheck::exhaustive)) return c;
  }
}

void for_each_bipartite(std::size_t a, std::size_t b, const std::function<void(const Graph&)>& f) {
  const auto xs = numbered("x", a);
  const auto ys = numbered("y", b);
  const auto vs = concat(xs, ys);
  const std::size_t m = a * b;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < m; ++k)
      if (s >> k & 1) edges.emplace_back(xs[k / b], ys[k % b]);
    f(Graph::from_edges(vs, edges));
  }
}

void for_each_matched_bipartite(std::size_t g, const std::function<void(const MatchedBipartite&)>& f) {
  const auto xs = numbered("x", g);
  const auto ys = numbered("y", g);
  const auto vs = concat(xs, ys);
  std::vector<Edge> pairing;
  std::vector<Edge> optional_edges;
  for (std::size_t i = 0; i < g; ++i) {
    pairing.emplace_back(xs[i], ys[i]);
    for (std::size_t j = 0; j < g; ++j)
      if (i != j) optional_edges.emplace_back(xs[i], ys[j]);
  }
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << optional_edges.size()); ++s) {
    auto edges = pairing;
    for (std::size_t k = 0; k < optional_edges.size(); ++k)
      if (s >> k & 1) edges.push_back(optional_edges[k]);
    f(MatchedBipartite{Graph::from_edges(vs, edges), pairing});
  }
}

void for_each_clutter(std::size_t n, std::size_t max_edges, const std::function<void(const Clutter&)>& f) {
  const Universe u(numbered("", n));
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Mask> chosen;
  // Edges are added in increasing mask order so each antichain appears once.
  std::function<void(Mask)> rec = [&](Mask from) {
    if (!chosen.empty()) f(Clutter::from_edges(u, chosen));
    if (chosen.size() == max_edges) return;
    for (Mask e = from; e < subsets; ++e) {
      const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                          [&](Mask g) { return is_subset(e, g) || is_subset(g, e); });
      if (comparable) continue;
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
    }
  };
  rec(1);
}

}  // namespace shellkit::gen
