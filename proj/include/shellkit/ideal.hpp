#pragma once

#include <optional>
#include <vector>

#include "shellkit/clutter.hpp"
#include "shellkit/common.hpp"

namespace shellkit {

/// Squarefree monomial ideal, stored as the supports of its minimal
/// generators in (degree, lex) order. The unit ideal is the single generator ∅;
/// the zero ideal has no generators.
class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal() = default;

  /// Any generating set; it is reduced to the minimal one.
  static SquarefreeMonomialIdeal generated_by(Universe variables, std::vector<Mask> supports);

  const Universe& variables() const { return variables_; }
  const std::vector<Mask>& generators() const { return generators_; }
  std::vector<std::vector<Label>> label_generators() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front() == 0; }

  /// The clutter of the generators. Requires a proper nonzero ideal.
  Clutter clutter() const;

  friend bool operator==(const SquarefreeMonomialIdeal&, const SquarefreeMonomialIdeal&) = default;

 private:
  SquarefreeMonomialIdeal(Universe v, std::vector<Mask> g) : variables_(std::move(v)), generators_(std::move(g)) {}

  Universe variables_;
  std::vector<Mask> generators_;
};

SquarefreeMonomialIdeal edge_ideal(const Clutter& c);

/// Generated by the minimal vertex covers of the clutter of I. Throws
/// PreconditionError for the zero or unit ideal.
SquarefreeMonomialIdeal alexander_dual(const SquarefreeMonomialIdeal& ideal);

/// Squarefree degree-d monomials of I, i.e. generators of I_[d], in lex order.
std::vector<Mask> degree_component(const SquarefreeMonomialIdeal& ideal, int d);

struct LinearQuotients {
  std::vector<Mask> order;
  /// colons[i]: variables generating (u_1, …, u_{i-1}) : u_i; colons[0] is empty.
  std::vector<Mask> colons;
};

/// Searches for an order with linear quotients: for i and every j < i some
/// k < i has u_k \ u_i = {x} with x ∈ u_j \ u_i. Greedy (most overlap first)
/// with backtracking over memoized failed prefix sets. Throws
/// PreconditionError if the supports are not an antichain.
std::optional<LinearQuotients> has_linear_quotients(const std::vector<Mask>& generators);

}  // namespace shellkit
