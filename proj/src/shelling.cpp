#include "shellkit/shelling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace shellkit {

std::vector<std::vector<Label>> ShellingCertificate::label_order() const {
  std::vector<std::vector<Label>> out;
  for (Mask f : order) out.push_back(universe.labels_of(f));
  return out;
}

namespace {

void require_permutation(const SimplicialComplex& d, std::vector<Mask> order) {
  sort_size_lex(order);
  if (order != d.facets()) throw PreconditionError("order is not a permutation of the complex's facets");
}

// Witness search for a fixed order: for every j, the first ell < j with
// F_j \ F_ell a singleton {v}, per vertex v.
ShellingCheck check_order(const Universe& universe, const std::vector<Mask>& order) {
  const std::size_t s = order.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> singles(s);  // (vertex, ell)
  for (std::size_t j = 0; j < s; ++j) {
    Mask covered = 0;
    for (std::size_t ell = 0; ell < j; ++ell) {
      const Mask diff = order[j] & ~order[ell];
      if (popcount(diff) == 1 && !(diff & covered)) {
        covered |= diff;
        singles[j].emplace_back(static_cast<std::size_t>(std::countr_zero(diff)), ell);
      }
    }
    std::sort(singles[j].begin(), singles[j].end());
  }
  ShellingCheck check;
  for (std::size_t i = 0; i < s && !check.counterexample; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const Mask diff = order[j] & ~order[i];
      const bool found = std::any_of(singles[j].begin(), singles[j].end(),
                                     [diff](const auto& p) { return (diff & bit(p.first)) != 0; });
      if (!found) {
        check.counterexample = std::make_pair(i, j);
        break;
      }
    }
  if (check.counterexample) return check;
  ShellingCertificate cert{universe, order, {}};
  cert.witnesses.reserve(s * (s - (s ? 1 : 0)) / 2);
  for (std::size_t j = 1; j < s; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Mask diff = order[j] & ~order[i];
      for (const auto& [v, ell] : singles[j])
        if (diff & bit(v)) {
          cert.witnesses.push_back({i, j, v, ell});
          break;
        }
    }
  check.certificate = std::move(cert);
  return check;
}

ShellingCertificate certified(const Universe& universe, const std::vector<Mask>& order, const char* construction) {
  auto check = check_order(universe, order);
  if (!check.ok()) throw std::logic_error(std::string(construction) + " produced an order that is not a shelling");
  return std::move(*check.certificate);
}

ShellingCertificate trivial_certificate(const Universe& universe, Mask facet) {
  return ShellingCertificate{universe, {facet}, {}};
}

// Rebuilds witnesses for a subsequence using the inherited witnesses; `kept`
// maps old positions to new ones (or npos). Throws when a witness falls outside.
ShellingCertificate inherit_witnesses(const ShellingCertificate& c, const std::vector<std::size_t>& kept_positions,
                                      Universe universe, std::vector<Mask> order,
                                      const std::vector<std::size_t>& vertex_map) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> new_index(c.order.size(), npos);
  for (std::size_t k = 0; k < kept_positions.size(); ++k) new_index[kept_positions[k]] = k;
  ShellingCertificate out{std::move(universe), std::move(order), {}};
  for (std::size_t j = 1; j < kept_positions.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const auto& w = c.witness(kept_positions[i], kept_positions[j]);
      if (new_index[w.ell] == npos || vertex_map[w.vertex] == npos)
        throw std::logic_error("inherited witness leaves the restricted order");
      out.witnesses.push_back({i, j, vertex_map[w.vertex], new_index[w.ell]});
    }
  return out;
}

}  // namespace

ShellingCheck verify_shelling(const SimplicialComplex& d, const std::vector<Mask>& order) {
  require_permutation(d, order);
  return check_order(d.universe(), order);
}

ShellingCheck verify_shelling(const SimplicialComplex& d, const std::vector<std::vector<Label>>& order) {
  std::vector<Mask> masks;
  for (const auto& f : order) masks.push_back(d.universe().mask_of(f));
  return verify_shelling(d, masks);
}

bool recheck_certificate(const ShellingCertificate& c) {
  const std::size_t s = c.order.size();
  if (c.witnesses.size() != (s == 0 ? 0 : s * (s - 1) / 2)) return false;
  for (Mask f : c.order)
    if (!is_subset(f, c.universe.all())) return false;
  std::size_t k = 0;
  for (std::size_t j = 1; j < s; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto& w = c.witnesses[k];
      if (w.i != i || w.j != j || w.ell >= j || w.vertex >= c.universe.size()) return false;
      const Mask v = bit(w.vertex);
      if (!(c.order[j] & v) || (c.order[i] & v)) return false;
      if ((c.order[j] & ~c.order[w.ell]) != v) return false;
    }
  return true;
}

bool certifies(const ShellingCertificate& c, const SimplicialComplex& d) {
  if (!(c.universe == d.universe()) || !recheck_certificate(c)) return false;
  auto sorted = c.order;
  sort_size_lex(sorted);
  return sorted == d.facets();
}

std::optional<ShellingCertificate> find_shelling_bruteforce(const SimplicialComplex& d, std::size_t facet_limit) {
  const auto& facets = d.facets();
  const std::size_t s = facets.size();
  if (s > facet_limit || s > 64)
    throw LimitExceeded("brute-force shelling: " + std::to_string(s) + " facets exceed the limit of " +
                        std::to_string(std::min<std::size_t>(facet_limit, 64)));
  if (s == 0) return ShellingCertificate{d.universe(), {}, {}};

  // single_vertex[j][l]: the vertex v when F_j \ F_l = {v}, else 0.
  std::vector<std::vector<Mask>> single(s, std::vector<Mask>(s, 0));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t l = 0; l < s; ++l) {
      const Mask diff = facets[j] & ~facets[l];
      if (popcount(diff) == 1) single[j][l] = diff;
    }
  // Whether F_j may follow the facets in `placed` depends only on that set.
  auto can_append = [&](Mask placed, std::size_t j) {
    Mask reachable = 0;
    for (auto l : indices_of(placed)) reachable |= single[j][l];
    for (auto i : indices_of(placed))
      if ((facets[j] & ~facets[i] & reachable) == 0) return false;
    return true;
  };

  std::unordered_set<Mask> dead;
  std::vector<Mask> order;
  auto search = [&](auto&& self, Mask placed) -> bool {
    if (order.size() == s) return true;
    if (dead.count(placed)) return false;
    for (std::size_t j = 0; j < s; ++j) {
      if (placed & bit(j)) continue;
      if (!can_append(placed, j)) continue;
      order.push_back(facets[j]);
      if (self(self, placed | bit(j))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return certified(d.universe(), order, "brute-force search");
}

ShellingCertificate shell_union(const ShellingCertificate& first, const ShellingCertificate& second) {
  for (const auto& l : first.universe.labels())
    if (second.universe.contains(l)) throw PreconditionError("shell_union: vertex sets share '" + l + "'");
  Universe u = first.universe.merged(second.universe);
  const std::size_t r = first.order.size();
  const std::size_t s = second.order.size();
  std::vector<std::size_t> first_map;
  std::vector<std::size_t> second_map;
  for (const auto& l : first.universe.labels()) first_map.push_back(u.index_of(l));
  for (const auto& l : second.universe.labels()) second_map.push_back(u.index_of(l));

  ShellingCertificate out{u, {}, {}};
  out.order.reserve(r * s);
  for (Mask f : first.order)
    for (Mask h : second.order) out.order.push_back(first.universe.translate(f, u) | second.universe.translate(h, u));
  const std::size_t total = r * s;
  out.witnesses.reserve(total == 0 ? 0 : total * (total - 1) / 2);
  for (std::size_t q = 1; q < total; ++q) {
    const std::size_t j = q / s;
    const std::size_t t = q % s;
    for (std::size_t p = 0; p < q; ++p) {
      const std::size_t i = p / s;
      const std::size_t k = p % s;
      if (i < j) {
        // F_j \ F_ell = {v} lifts to (F_j∪H_t) \ (F_ell∪H_t).
        const auto& w = first.witness(i, j);
        out.witnesses.push_back({p, q, first_map[w.vertex], w.ell * s + t});
      } else {
        const auto& w = second.witness(k, t);
        out.witnesses.push_back({p, q, second_map[w.vertex], i * s + w.ell});
      }
    }
  }
  return out;
}

ShellingCertificate restrict_shelling_to_link(const ShellingCertificate& c, const Label& x) {
  if (!recheck_certificate(c)) throw PreconditionError("restrict_shelling_to_link: invalid certificate");
  const std::size_t xi = c.universe.index_of(x);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < c.order.size(); ++k)
    if (c.order[k] & bit(xi)) kept.push_back(k);
  if (kept.empty()) throw PreconditionError("restrict_shelling_to_link: '" + x + "' lies in no facet");
  Universe u = c.universe.subset(c.universe.all() & ~bit(xi));
  std::vector<Mask> order;
  for (auto k : kept) order.push_back(c.universe.translate(c.order[k] & ~bit(xi), u));
  std::vector<std::size_t> vertex_map(c.universe.size(), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < c.universe.size(); ++v)
    if (v != xi) vertex_map[v] = u.index_of(c.universe[v]);
  return inherit_witnesses(c, kept, std::move(u), std::move(order), vertex_map);
}

ShellingCertificate restrict_shelling_avoiding(const ShellingCertificate& c, const std::vector<Label>& avoid) {
  if (!recheck_certificate(c)) throw PreconditionError("restrict_shelling_avoiding: invalid certificate");
  const Mask a = c.universe.mask_of(avoid);
  std::vector<std::size_t> kept;
  std::vector<Mask> order;
  for (std::size_t k = 0; k < c.order.size(); ++k)
    if (is_subset(a, c.order[k])) {
      kept.push_back(k);
      order.push_back(c.order[k]);
    }
  std::vector<std::size_t> identity(c.universe.size());
  for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = v;
  return inherit_witnesses(c, kept, c.universe, std::move(order), identity);
}

ShellingCertificate adjoin_cone(const ShellingCertificate& c, const std::vector<Label>& cone) {
  for (const auto& l : cone)
    if (c.universe.contains(l)) throw PreconditionError("adjoin_cone: '" + l + "' already present");
  Universe u = c.universe.merged(Universe(cone));
  const Mask apex = u.mask_of(cone);
  ShellingCertificate out{u, {}, c.witnesses};
  for (Mask f : c.order) out.order.push_back(c.universe.translate(f, u) | apex);
  for (auto& w : out.witnesses) w.vertex = u.index_of(c.universe[w.vertex]);
  return out;
}

namespace {

void lift(const ShellingCertificate& c, const Universe& target, Mask extra, std::vector<Mask>& order_out) {
  for (Mask f : c.order) order_out.push_back(c.universe.translate(f, target) | extra);
}

class BipartiteRecursion {
 public:
  BipartiteShelling result;

  std::optional<ShellingCertificate> run(const Graph& g, std::size_t depth) {
    step(depth, "node", g.vertices().labels());
    if (g.empty()) return trivial_certificate(g.vertices(), 0);

    const auto isolated = isolated_vertices(g);
    if (isolated.size() == g.order()) return trivial_certificate(g.vertices(), g.vertices().all());
    if (!isolated.empty()) {
      step(depth, "cone off isolated vertices", isolated);
      auto inner = run(delete_vertices(g, isolated), depth + 1);
      if (!inner) return std::nullopt;
      return adjoin_cone(*inner, isolated);
    }

    const auto components = connected_components(g);
    if (components.size() > 1) {
      step(depth, "split into " + std::to_string(components.size()) + " components", {});
      std::optional<ShellingCertificate> acc;
      for (const auto& comp : components) {
        auto part = run(comp, depth + 1);
        if (!part) return std::nullopt;
        acc = acc ? shell_union(*acc, *part) : std::move(*part);
      }
      return acc;
    }

    const auto leaves = degree_one_vertices(g);
    if (leaves.empty()) {
      step(depth, "fail: no degree-1 vertex", g.vertices().labels());
      result.failing_node = g;
      return std::nullopt;
    }
    const auto& [x, y] = leaves.front();
    step(depth, "pivot on degree-1 vertex " + x + " with neighbor " + y, {x, y});
    auto with_x = run(delete_closed_neighborhood(g, x), depth + 1);
    if (!with_x) return std::nullopt;
    auto with_y = run(delete_closed_neighborhood(g, y), depth + 1);
    if (!with_y) return std::nullopt;

    const auto& u = g.vertices();
    std::vector<Mask> order;
    lift(*with_x, u, bit(u.index_of(x)), order);
    lift(*with_y, u, bit(u.index_of(y)), order);
    return certified(u, order, "bipartite recursion");
  }

 private:
  void step(std::size_t depth, std::string action, std::vector<Label> vertices) {
    result.trace.push_back({depth, std::move(action), std::move(vertices)});
  }
};

ShellingCertificate chordal_recursion(const Graph& g) {
  const auto& u = g.vertices();
  if (g.empty()) return trivial_certificate(u, 0);
  std::vector<Mask> order;
  if (is_complete(g)) {
    for (std::size_t i = 0; i < g.order(); ++i) order.push_back(bit(i));
    return certified(u, order, "chordal base case");
  }
  const auto components = connected_components(g);
  if (components.size() > 1) {
    std::optional<ShellingCertificate> acc;
    for (const auto& comp : components) {
      auto part = chordal_recursion(comp);
      acc = acc ? shell_union(*acc, part) : std::move(part);
    }
    return *acc;
  }
  const auto first = *find_simplicial_vertex(g);
  std::vector<Label> clique{first};
  for (const auto& l : neighbors(g, first)) clique.push_back(l);
  for (const auto& xi : clique) {
    auto block = chordal_recursion(delete_closed_neighborhood(g, xi));
    lift(block, u, bit(u.index_of(xi)), order);
  }
  return certified(u, order, "chordal recursion");
}

class FreeVertexRecursion {
 public:
  FreeVertexShelling result;

  std::optional<ShellingCertificate> run(const Clutter& c, std::size_t depth) {
    const auto& x = c.vertices();
    step(depth, "minor", c);
    if (c.edges().empty()) return trivial_certificate(x, x.all());
    if (c.edges().size() == 1) {
      std::vector<Mask> order;
      for (auto v : indices_of(c.edges().front())) order.push_back(x.all() & ~bit(v));
      sort_size_lex(order);
      return certified(x, order, "single-edge base case");
    }
    const Mask free = free_vertex_mask(c);
    if (free == 0) {
      result.trace.push_back({depth, "fail: no free vertex", x.labels()});
      result.failing_minor = c;
      return std::nullopt;
    }
    const auto xn = static_cast<std::size_t>(std::countr_zero(free));
    const Mask edge = *std::find_if(c.edges().begin(), c.edges().end(), [xn](Mask e) { return (e & bit(xn)) != 0; });
    const Mask a = edge & ~bit(xn);
    result.trace.push_back({depth, "free vertex " + x[xn], x.labels_of(edge)});

    Universe rest = x.subset(x.all() & ~bit(xn));
    std::vector<Mask> others;
    for (Mask e : c.edges())
      if (e != edge) others.push_back(x.translate(e, rest));

    // x_n = 0 drops the edge; x_n = 1 shrinks it to A.
    auto zero_minor = run(Clutter::from_edges(rest, others), depth + 1);
    if (!zero_minor) return std::nullopt;
    std::optional<ShellingCertificate> one_minor;
    if (a != 0) {
      auto with_a = others;
      with_a.push_back(x.translate(a, rest));
      one_minor = run(Clutter::minimalized(rest, std::move(with_a)), depth + 1);
      if (!one_minor) return std::nullopt;
    }

    std::vector<Mask> order;
    if (one_minor) lift(*one_minor, x, bit(xn), order);
    const auto tail = restrict_shelling_avoiding(*zero_minor, x.labels_of(a));
    lift(tail, x, 0, order);
    return certified(x, order, "free-vertex recursion");
  }

 private:
  void step(std::size_t depth, const std::string& action, const Clutter& c) {
    std::vector<Label> edges;
    for (const auto& e : c.label_edges()) edges.push_back("{" + join_labels(e, ",") + "}");
    result.trace.push_back({depth, action, std::move(edges)});
  }
};

}  // namespace

BipartiteShelling shell_bipartite(const Graph& g) {
  if (!bipartition(g)) throw PreconditionError("shell_bipartite: graph is not bipartite");
  BipartiteRecursion recursion;
  recursion.result.certificate = recursion.run(g, 0);
  return std::move(recursion.result);
}

ShellingCertificate shell_chordal(const Graph& g) {
  if (!is_chordal(g)) throw PreconditionError("shell_chordal: graph is not chordal");
  return chordal_recursion(g);
}

FreeVertexShelling shell_free_vertex_clutter(const Clutter& c) {
  FreeVertexRecursion recursion;
  recursion.result.certificate = recursion.run(c, 0);
  return std::move(recursion.result);
}

}  // namespace shellkit
