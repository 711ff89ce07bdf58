#include "shellkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace shellkit {

Graph Graph::from_edges(std::vector<Label> vertices, const std::vector<Edge>& edges) {
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("loop at vertex '" + a + "'");
    vertices.push_back(a);
    vertices.push_back(b);
  }
  Universe u(std::move(vertices));
  std::vector<Mask> adj(u.size(), 0);
  for (const auto& [a, b] : edges) {
    const auto ia = u.index_of(a);
    const auto ib = u.index_of(b);
    adj[ia] |= bit(ib);
    adj[ib] |= bit(ia);
  }
  return Graph(std::move(u), std::move(adj));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adj_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

bool Graph::adjacent(std::string_view a, std::string_view b) const {
  return (adj_[universe_.index_of(a)] & bit(universe_.index_of(b))) != 0;
}

std::size_t Graph::degree(std::string_view label) const {
  return static_cast<std::size_t>(popcount(adj_[universe_.index_of(label)]));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (auto j : indices_of(adj_[i] & ~full_mask(i + 1))) out.emplace_back(universe_[i], universe_[j]);
  return out;
}

Graph Graph::induced(Mask keep) const {
  keep &= universe_.all();
  Universe u = universe_.subset(keep);
  std::vector<Mask> adj;
  adj.reserve(u.size());
  for (auto i : indices_of(keep)) adj.push_back(universe_.translate(adj_[i] & keep, u));
  return Graph(std::move(u), std::move(adj));
}

std::vector<Label> neighbors(const Graph& g, const Label& x) {
  return g.vertices().labels_of(g.adjacency(g.vertices().index_of(x)));
}

Graph delete_closed_neighborhood(const Graph& g, const Label& x) {
  const auto i = g.vertices().index_of(x);
  return g.induced(g.vertices().all() & ~(g.adjacency(i) | bit(i)));
}

Graph delete_vertices(const Graph& g, const std::vector<Label>& s) {
  return g.induced(g.vertices().all() & ~g.vertices().mask_of(s));
}

Label whisker_tip(const Graph& g, const Label& x) {
  Label tip = x + std::string(kWhiskerSuffix);
  while (g.has_vertex(tip)) tip += kWhiskerSuffix;
  return tip;
}

Graph add_whiskers(const Graph& g, const std::vector<Label>& s) {
  std::set<Label> unique(s.begin(), s.end());
  for (const auto& x : unique)
    if (!g.has_vertex(x)) throw PreconditionError("whisker base '" + x + "' is not a vertex");
  std::vector<Edge> edges = g.edges();
  std::vector<Label> vertices = g.vertices().labels();
  std::set<Label> taken(vertices.begin(), vertices.end());
  for (const auto& x : unique) {
    Label tip = x + std::string(kWhiskerSuffix);
    while (taken.count(tip)) tip += kWhiskerSuffix;
    taken.insert(tip);
    edges.emplace_back(x, tip);
  }
  return Graph::from_edges(std::move(vertices), edges);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : indices_of(g.adjacency(v))) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(g.vertices()[v]);
  return parts;
}

namespace {

bool is_clique(const Graph& g, Mask m) {
  for (auto i : indices_of(m))
    if (!is_subset(m & ~bit(i), g.adjacency(i))) return false;
  return true;
}

}  // namespace

bool is_complete(const Graph& g) { return is_clique(g, g.vertices().all()); }

std::optional<Label> find_simplicial_vertex(const Graph& g, const std::vector<Label>& avoid) {
  Mask banned = 0;
  for (const auto& a : avoid)
    if (auto i = g.vertices().find(a)) banned |= bit(*i);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (banned & bit(i)) continue;
    if (is_clique(g, g.adjacency(i))) return g.vertices()[i];
  }
  return std::nullopt;
}

std::optional<std::vector<Label>> is_chordal(const Graph& g) {
  std::vector<Label> order;
  Graph rest = g;
  while (!rest.empty()) {
    auto x = find_simplicial_vertex(rest);
    if (!x) return std::nullopt;
    order.push_back(*x);
    rest = delete_vertices(rest, {*x});
  }
  return order;
}

std::vector<Edge> degree_one_vertices(const Graph& g) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (popcount(g.adjacency(i)) == 1)
      out.emplace_back(g.vertices()[i], g.vertices()[static_cast<std::size_t>(std::countr_zero(g.adjacency(i)))]);
  return out;
}

std::vector<Label> isolated_vertices(const Graph& g) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.adjacency(i) == 0) out.push_back(g.vertices()[i]);
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  Mask seen = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen & bit(s)) continue;
    Mask comp = bit(s);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (auto v : indices_of(frontier)) next |= g.adjacency(v);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(g.induced(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) { return !g.empty() && is_connected(g) && g.edge_count() + 1 == g.order(); }

namespace families {

namespace {
std::vector<Label> numbered(const std::string& prefix, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}
}  // namespace

Graph cycle(std::size_t n) {
  auto v = numbered("", n);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n && n >= 3; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
  return Graph::from_edges(v, e);
}

Graph path(std::size_t n) {
  auto v = numbered("", n);
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(v[i], v[i + 1]);
  return Graph::from_edges(v, e);
}

Graph complete(std::size_t n) {
  auto v = numbered("", n);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
  return Graph::from_edges(v, e);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  auto xs = numbered("x", m);
  auto ys = numbered("y", n);
  std::vector<Edge> e;
  for (const auto& x : xs)
    for (const auto& y : ys) e.emplace_back(x, y);
  std::vector<Label> v = xs;
  v.insert(v.end(), ys.begin(), ys.end());
  return Graph::from_edges(v, e);
}

Graph acyclic_not_scm_example() {
  return Graph::from_edges({}, {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x5", "y5"},
                                {"x1", "y2"}, {"x2", "y3"}, {"x2", "y4"}, {"x3", "y4"}, {"x4", "y5"}});
}

}  // namespace families

}  // namespace shellkit
