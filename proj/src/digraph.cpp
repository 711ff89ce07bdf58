#include "shellkit/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace shellkit {

std::vector<Label> MatchedBipartite::x_side() const {
  std::vector<Label> out;
  for (const auto& p : pairing) out.push_back(p.first);
  return out;
}

std::vector<Label> MatchedBipartite::y_side() const {
  std::vector<Label> out;
  for (const auto& p : pairing) out.push_back(p.second);
  return out;
}

namespace {

// Kuhn's augmenting-path matching from x side to y side; match_of_y[y] = x.
bool augment(const Graph& g, std::size_t x, Mask y_side, std::vector<std::optional<std::size_t>>& match_of_y, Mask& seen) {
  for (auto y : indices_of(g.adjacency(x) & y_side)) {
    if (seen & bit(y)) continue;
    seen |= bit(y);
    if (!match_of_y[y] || augment(g, *match_of_y[y], y_side, match_of_y, seen)) {
      match_of_y[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

MatchedBipartite check_conditions(const Graph& g, const std::optional<std::vector<Edge>>& pairing) {
  const auto& u = g.vertices();
  MatchedBipartite result{g, {}};
  if (pairing) {
    Mask xs = 0;
    Mask ys = 0;
    for (const auto& [x, y] : *pairing) {
      if (!g.has_vertex(x) || !g.has_vertex(y))
        throw MatchingError(MatchingErrorKind::pairing_not_matching, "pairing names unknown vertex");
      const Mask bx = bit(u.index_of(x));
      const Mask by = bit(u.index_of(y));
      if ((xs | ys) & (bx | by) || x == y)
        throw MatchingError(MatchingErrorKind::pairing_not_matching, "pairing uses vertex twice: " + x + "=" + y);
      if (!g.adjacent(x, y))
        throw MatchingError(MatchingErrorKind::pairing_not_matching, "pair " + x + "=" + y + " is not an edge");
      xs |= bx;
      ys |= by;
    }
    if ((xs | ys) != u.all())
      throw MatchingError(MatchingErrorKind::pairing_not_matching, "pairing does not cover every vertex");
    for (const auto& [a, b] : g.edges()) {
      const bool ax = (xs & bit(u.index_of(a))) != 0;
      const bool bx = (xs & bit(u.index_of(b))) != 0;
      if (ax == bx)
        throw MatchingError(MatchingErrorKind::not_bipartite, "edge " + a + "-" + b + " does not cross the pairing sides");
    }
    result.pairing = *pairing;
  } else {
    auto parts = bipartition(g);
    if (!parts) throw MatchingError(MatchingErrorKind::not_bipartite, "graph is not bipartite");
    if (parts->first.size() != parts->second.size())
      throw MatchingError(MatchingErrorKind::unequal_sides, "bipartition sides differ in size: " +
                                                                std::to_string(parts->first.size()) + " != " +
                                                                std::to_string(parts->second.size()));
    const Mask y_side = u.mask_of(parts->second);
    std::vector<std::optional<std::size_t>> match_of_y(u.size());
    for (const auto& x : parts->first) {
      Mask seen = 0;
      if (!augment(g, u.index_of(x), y_side, match_of_y, seen))
        throw MatchingError(MatchingErrorKind::no_perfect_matching, "no perfect matching (stuck at " + x + ")");
    }
    for (auto y : indices_of(y_side)) result.pairing.emplace_back(u[*match_of_y[y]], u[y]);
  }
  std::sort(result.pairing.begin(), result.pairing.end());
  return result;
}

std::vector<std::vector<Edge>> all_perfect_matchings(const Graph& g, const std::vector<Label>& x_side) {
  const auto& u = g.vertices();
  const Mask xs = u.mask_of(x_side);
  const Mask ys = u.all() & ~xs;
  std::vector<std::vector<Edge>> out;
  if (popcount(xs) != popcount(ys)) return out;
  std::vector<Label> sorted_x = x_side;
  std::sort(sorted_x.begin(), sorted_x.end());
  std::vector<Edge> current;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask used) {
    if (k == sorted_x.size()) {
      out.push_back(current);
      return;
    }
    const auto xi = u.index_of(sorted_x[k]);
    for (auto y : indices_of(g.adjacency(xi) & ys & ~used)) {
      current.emplace_back(sorted_x[k], u[y]);
      rec(k + 1, used | bit(y));
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

Digraph::Digraph(std::vector<Label> vertices, const std::vector<Edge>& arcs) : vertices_(std::move(vertices)) {
  out_.assign(vertices_.size(), 0);
  for (const auto& [a, b] : arcs) {
    if (a == b) throw PreconditionError("digraph self-arc at '" + a + "'");
    out_[vertices_.index_of(a)] |= bit(vertices_.index_of(b));
  }
}

Mask Digraph::in(std::size_t i) const {
  Mask m = 0;
  for (std::size_t j = 0; j < out_.size(); ++j)
    if (out_[j] & bit(i)) m |= bit(j);
  return m;
}

bool Digraph::has_arc(std::string_view from, std::string_view to) const {
  return (out_[vertices_.index_of(from)] & bit(vertices_.index_of(to))) != 0;
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < out_.size(); ++i)
    for (auto j : indices_of(out_[i])) out.emplace_back(vertices_[i], vertices_[j]);
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t n = 0;
  for (Mask m : out_) n += static_cast<std::size_t>(popcount(m));
  return n;
}

Digraph build_digraph(const MatchedBipartite& m) {
  std::map<Label, Label> partner_of_y;
  for (const auto& [x, y] : m.pairing) partner_of_y[y] = x;
  std::vector<Edge> arcs;
  for (const auto& [xi, yi] : m.pairing)
    for (const auto& y : neighbors(m.graph, xi))
      if (y != yi) arcs.emplace_back(xi, partner_of_y.at(y));
  return Digraph(m.x_side(), arcs);
}

AcyclicityResult is_acyclic(const Digraph& d) {
  const std::size_t n = d.vertices().size();
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : indices_of(d.out(i))) ++indegree[j];
  std::vector<Label> order;
  Mask done = 0;
  while (order.size() < n) {
    std::size_t next = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!(done & bit(i)) && indegree[i] == 0) {
        next = i;
        break;
      }
    if (next == n) break;
    done |= bit(next);
    order.push_back(d.vertices()[next]);
    for (auto j : indices_of(d.out(next))) --indegree[j];
  }
  AcyclicityResult result;
  if (order.size() == n) {
    result.order = std::move(order);
    return result;
  }
  // Every remaining vertex keeps an in-arc from another remaining vertex:
  // walk backwards until a vertex repeats.
  const Mask remaining = full_mask(n) & ~done;
  std::vector<std::size_t> walk;
  std::vector<int> position(n, -1);
  std::size_t v = static_cast<std::size_t>(std::countr_zero(remaining));
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = static_cast<std::size_t>(std::countr_zero(d.in(v) & remaining));
  }
  std::vector<Label> cycle;
  for (auto k = walk.size(); k-- > static_cast<std::size_t>(position[v]);) cycle.push_back(d.vertices()[walk[k]]);
  // Rotate to start at the smallest label.
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  result.cycle = std::move(cycle);
  return result;
}

TransitivityResult is_transitive(const Digraph& d) {
  const std::size_t n = d.vertices().size();
  TransitivityResult result;
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : indices_of(d.out(i)))
      for (auto k : indices_of(d.out(j))) {
        if (k == i) continue;
        if (!(d.out(i) & bit(k))) {
          result.holds = false;
          result.failing_triple = std::array<Label, 3>{d.vertices()[i], d.vertices()[j], d.vertices()[k]};
          return result;
        }
      }
  return result;
}

CmClassification classify_cm_bipartite(const MatchedBipartite& m) {
  const auto d = build_digraph(m);
  CmClassification c;
  c.acyclicity = is_acyclic(d);
  c.transitivity = is_transitive(d);
  c.cohen_macaulay = c.acyclicity.acyclic() && c.transitivity.holds;
  if (!c.acyclicity.acyclic()) {
    c.reason = "directed cycle " + join_labels(*c.acyclicity.cycle, " -> ");
  } else if (!c.transitivity.holds) {
    const auto& t = *c.transitivity.failing_triple;
    c.reason = "not transitive: (" + t[0] + "," + t[1] + "), (" + t[1] + "," + t[2] + ") present but (" + t[0] + "," +
               t[2] + ") missing";
  } else {
    c.reason = "acyclic and transitive";
  }
  return c;
}

AcyclicityProbe seq_cm_implies_acyclic_probe(const MatchedBipartite& m, const FieldSpec& field,
                                             std::size_t universe_limit) {
  AcyclicityProbe probe;
  probe.sequentially_cm = is_sequentially_cm(independence_complex(m.graph), field, universe_limit).holds;
  probe.acyclic = is_acyclic(build_digraph(m)).acyclic();
  return probe;
}

SinkSourceResult tree_sink_source_check(const MatchedBipartite& m) {
  if (!is_tree(m.graph)) throw PreconditionError("tree_sink_source_check: graph is not a tree");
  const auto d = build_digraph(m);
  const std::size_t n = d.vertices().size();
  SinkSourceResult result;
  // Underlying undirected graph of the digraph must be a tree.
  std::vector<Edge> undirected;
  for (const auto& [a, b] : d.arcs())
    if (a < b || !d.has_arc(b, a)) undirected.emplace_back(std::min(a, b), std::max(a, b));
  const auto shadow = Graph::from_edges(d.vertices().labels(), undirected);
  if (!is_tree(shadow) || d.arc_count() + 1 != n) {
    result.holds = false;
    return result;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d.out(i) != 0 && d.in(i) != 0) {
      result.holds = false;
      result.offending = d.vertices()[i];
      return result;
    }
  return result;
}

}  // namespace shellkit
