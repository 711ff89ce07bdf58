#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shellkit/clutter.hpp"
#include "shellkit/complex.hpp"

namespace shellkit {

/// Coefficient field: the rationals or F_p for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Reduced Betti numbers, ranks[i + 1] = dim H̃_i for i = -1 .. dim Δ.
struct HomologyProfile {
  std::vector<std::size_t> ranks;

  std::size_t betti(int i) const;
  int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
  bool acyclic() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact rank. Over Q: fraction-free integer elimination, promoted to GMP
/// integers if 64-bit arithmetic would overflow.
std::size_t matrix_rank(const IntMatrix& m, const FieldSpec& field);

/// Boundary map from the faces in `faces_of_size_s` to those in
/// `faces_of_size_s_minus_1` (both lex sorted); rows are the source faces.
IntMatrix boundary_matrix(const std::vector<Mask>& faces_of_size_s, const std::vector<Mask>& faces_of_size_s_minus_1);

HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& field = FieldSpec::rationals(),
                                 std::size_t universe_limit = kDefaultUniverseLimit);

/// Face whose link has nonzero homology strictly below the link's dimension.
struct ReisnerWitness {
  std::vector<Label> face;
  int degree = 0;
};

struct CohenMacaulayResult {
  bool holds = true;
  std::optional<ReisnerWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Reisner's criterion over every face, ∅ included, in increasing dimension.
CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& field = FieldSpec::rationals(),
                                      std::size_t universe_limit = kDefaultUniverseLimit);

struct SequentialCmResult {
  bool holds = true;
  /// Dimension k whose pure skeleton fails to be Cohen-Macaulay.
  std::optional<int> failing_skeleton;
  std::optional<ReisnerWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Duval's criterion: every pure skeleton Δ^[k], -1 <= k <= dim Δ, is Cohen-Macaulay.
SequentialCmResult is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& field = FieldSpec::rationals(),
                                      std::size_t universe_limit = kDefaultUniverseLimit);

/// All minimal vertex covers have the same size.
bool is_unmixed(const Clutter& c);

}  // namespace shellkit
