#include "shellkit/ideal.hpp"

#include <algorithm>
#include <set>

namespace shellkit {

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::generated_by(Universe variables, std::vector<Mask> supports) {
  for (Mask s : supports)
    if (!is_subset(s, variables.all())) throw PreconditionError("generator uses an undeclared variable");
  auto gens = minimal_elements(std::move(supports));
  return SquarefreeMonomialIdeal(std::move(variables), std::move(gens));
}

std::vector<std::vector<Label>> SquarefreeMonomialIdeal::label_generators() const {
  std::vector<std::vector<Label>> out;
  for (Mask g : generators_) out.push_back(variables_.labels_of(g));
  return out;
}

Clutter SquarefreeMonomialIdeal::clutter() const {
  if (is_zero() || is_unit()) throw PreconditionError("the zero and unit ideals have no clutter");
  return Clutter::from_edges(variables_, generators_);
}

SquarefreeMonomialIdeal edge_ideal(const Clutter& c) {
  return SquarefreeMonomialIdeal::generated_by(c.vertices(), c.edges());
}

SquarefreeMonomialIdeal alexander_dual(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw PreconditionError("alexander_dual needs a proper nonzero ideal");
  return SquarefreeMonomialIdeal::generated_by(ideal.variables(), minimal_vertex_covers(ideal.clutter()));
}

std::vector<Mask> degree_component(const SquarefreeMonomialIdeal& ideal, int d) {
  const auto n = static_cast<int>(ideal.variables().size());
  if (d < 0 || d > n) throw PreconditionError("degree_component: degree " + std::to_string(d) + " outside [0, " +
                                              std::to_string(n) + "]");
  std::set<Mask, decltype(&lex_less)> found(&lex_less);
  const Mask all = ideal.variables().all();
  for (Mask g : ideal.generators()) {
    const int extra = d - popcount(g);
    if (extra < 0) continue;
    const auto free = indices_of(all & ~g);
    // Choose `extra` further variables.
    auto rec = [&](auto&& self, std::size_t start, Mask acc, int left) -> void {
      if (left == 0) {
        found.insert(acc);
        return;
      }
      for (std::size_t i = start; i + static_cast<std::size_t>(left) <= free.size(); ++i)
        self(self, i + 1, acc | bit(free[i]), left - 1);
    };
    rec(rec, 0, g, extra);
  }
  return {found.begin(), found.end()};
}

namespace {

struct DynamicSet {
  std::vector<std::uint64_t> words;
  explicit DynamicSet(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  bool operator<(const DynamicSet& o) const { return words < o.words; }
};

}  // namespace

std::optional<LinearQuotients> has_linear_quotients(const std::vector<Mask>& generators) {
  if (!is_antichain(generators)) throw PreconditionError("has_linear_quotients: generators must form an antichain");
  const std::size_t s = generators.size();
  // single[i][k]: the variable x when u_k \ u_i = {x}.
  std::vector<std::vector<Mask>> single(s, std::vector<Mask>(s, 0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      const Mask diff = generators[k] & ~generators[i];
      if (popcount(diff) == 1) single[i][k] = diff;
    }

  std::vector<std::size_t> order;
  DynamicSet placed(s);
  std::set<DynamicSet> dead;

  auto colon_of = [&](std::size_t i) {
    Mask colon = 0;
    for (auto k : order) colon |= single[i][k];
    return colon;
  };
  auto can_append = [&](std::size_t i) {
    const Mask colon = colon_of(i);
    for (auto j : order)
      if ((generators[j] & ~generators[i] & colon) == 0) return false;
    return true;
  };

  auto search = [&](auto&& self) -> bool {
    if (order.size() == s) return true;
    if (dead.count(placed)) return false;
    std::vector<std::pair<int, std::size_t>> candidates;
    for (std::size_t i = 0; i < s; ++i) {
      if (placed.test(i) || !can_append(i)) continue;
      int overlap = 0;
      for (auto j : order) overlap += popcount(generators[i] & generators[j]);
      candidates.emplace_back(-overlap, i);
    }
    std::stable_sort(candidates.begin(), candidates.end());
    for (const auto& [_, i] : candidates) {
      order.push_back(i);
      placed.set(i);
      if (self(self)) return true;
      placed.reset(i);
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!search(search)) return std::nullopt;

  LinearQuotients result;
  std::vector<std::size_t> prefix;
  for (auto i : order) {
    result.order.push_back(generators[i]);
    Mask colon = 0;
    for (auto k : prefix) colon |= single[i][k];
    result.colons.push_back(colon);
    prefix.push_back(i);
  }
  return result;
}

}  // namespace shellkit
