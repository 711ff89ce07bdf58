#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "shellkit/clutter.hpp"
#include "shellkit/digraph.hpp"
#include "shellkit/graph.hpp"

namespace shellkit::gen {

using Rng = std::mt19937_64;

/// x1..xa and y1..yb; each cross pair is an edge with probability p.
Graph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng);

/// Vertices v1..vn, G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Each new vertex attaches to a random subset of a random existing clique,
/// so the reverse insertion order is a perfect elimination order.
Graph random_chordal(std::size_t n, Rng& rng);

/// Random antichain of at most `max_edges` edges over vertices 1..n.
Clutter random_clutter(std::size_t n, std::size_t max_edges, Rng& rng);

/// Grows a clutter by f-leaf attachment and keeps it only if the exhaustive
/// f-forest check accepts it.
Clutter random_f_forest(std::size_t max_vertices, std::size_t max_edges, Rng& rng);

/// Calls `f` on every subgraph of K_{a,b} (vertices x1..xa, y1..yb).
void for_each_bipartite(std::size_t a, std::size_t b, const std::function<void(const Graph&)>& f);

/// Calls `f` on every matched bipartite graph with pairing x_i=y_i, i <= g.
void for_each_matched_bipartite(std::size_t g, const std::function<void(const MatchedBipartite&)>& f);

/// Calls `f` on every clutter over vertices 1..n with at most `max_edges` edges
/// (each antichain once, vertices not in any edge allowed).
void for_each_clutter(std::size_t n, std::size_t max_edges, const std::function<void(const Clutter&)>& f);

}  // namespace shellkit::gen
