#include "shellkit/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace shellkit {

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw PreconditionError("field characteristic must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const { return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

std::size_t HomologyProfile::betti(int i) const {
  const auto idx = static_cast<std::size_t>(i + 1);
  return i >= -1 && idx < ranks.size() ? ranks[idx] : 0;
}

bool HomologyProfile::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }

bool is_zero(std::int64_t v) { return v == 0; }
bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const mpz_class& v) { return abs(v) == 1; }

void divide_by_content(std::vector<std::int64_t>& row) {
  std::int64_t g = 0;
  for (auto v : row) {
    if (v == INT64_MIN) throw Overflow{};
    g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) v /= g;
}

void divide_by_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Row reduction that stays in the integers: row <- p*row - a*pivot, then the
// row is divided by the gcd of its entries. Every step is invertible over Q.
template <class Int>
std::size_t integer_rank(std::vector<std::vector<Int>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (is_zero(rows[r][c])) continue;
      if (pivot == rows.size()) pivot = r;
      if (is_unit(rows[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& p_row = rows[rank];
    const Int p = p_row[c];
    const bool unit = is_unit(p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      if (is_zero(row[c])) continue;
      const Int a = row[c];
      if (unit) {
        // p = ±1: row <- row - (a/p)·pivot.
        const Int f = checked_mul(a, p);
        for (std::size_t k = c; k < cols; ++k)
          if (!is_zero(p_row[k])) row[k] = checked_sub(row[k], checked_mul(f, p_row[k]));
      } else {
        for (std::size_t k = c; k < cols; ++k) row[k] = checked_sub(checked_mul(p, row[k]), checked_mul(a, p_row[k]));
        divide_by_content(row);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t modular_rank(const IntMatrix& m, std::uint32_t p) {
  const std::uint64_t mod = p;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(mod);
      rows[r][c] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(mod) : v);
    }
  auto inverse = [mod](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t e = mod - 2;
    while (e) {
      if (e & 1) result = result * a % mod;
      a = a * a % mod;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && rows[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c] * inv % mod;
      for (std::size_t k = c; k < m.cols; ++k)
        rows[r][k] = (rows[r][k] + (mod - f) * rows[rank][k]) % mod;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!field.is_rationals()) return modular_rank(m, field.characteristic());
  std::vector<std::vector<std::int64_t>> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) rows[r].assign(m.data.begin() + static_cast<std::ptrdiff_t>(r * m.cols),
                                                          m.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols));
  try {
    return integer_rank(std::move(rows), m.cols);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(m.rows, std::vector<mpz_class>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) big[r][c] = static_cast<long>(m.at(r, c));
    return integer_rank(std::move(big), m.cols);
  }
}

IntMatrix boundary_matrix(const std::vector<Mask>& source, const std::vector<Mask>& target) {
  std::unordered_map<Mask, std::size_t> index;
  index.reserve(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  IntMatrix m(source.size(), target.size());
  for (std::size_t r = 0; r < source.size(); ++r) {
    std::int64_t sign = 1;
    for (auto v : indices_of(source[r])) {
      m.at(r, index.at(source[r] & ~bit(v))) = sign;
      sign = -sign;
    }
  }
  return m;
}

namespace {

// Faces of size <= max_size, faces[s] = lex-sorted faces of size s.
FacesByDimension faces_up_to(const SimplicialComplex& d, int max_size) {
  const int top = std::min(max_size, d.dimension() + 1);
  if (top < 0) return {};
  std::vector<std::unordered_set<Mask>> seen(static_cast<std::size_t>(top) + 1);
  for (Mask f : d.facets()) {
    const auto idx = indices_of(f);
    auto rec = [&](auto&& self, std::size_t start, Mask acc, int size) -> void {
      seen[static_cast<std::size_t>(size)].insert(acc);
      if (size == top) return;
      for (std::size_t i = start; i < idx.size(); ++i) self(self, i + 1, acc | bit(idx[i]), size + 1);
    };
    rec(rec, 0, 0, 0);
  }
  FacesByDimension out(seen.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s].assign(seen[s].begin(), seen[s].end());
    sort_lex(out[s]);
  }
  return out;
}

// β_i for -1 <= i <= max_degree.
HomologyProfile homology_upto(const SimplicialComplex& d, const FieldSpec& field, int max_degree) {
  const int dim = d.dimension();
  max_degree = std::min(max_degree, dim);
  const auto faces = faces_up_to(d, max_degree + 2);
  // ranks_of_boundary[s]: rank of ∂ from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> boundary_rank(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s)
    boundary_rank[s] = matrix_rank(boundary_matrix(faces[s], faces[s - 1]), field);
  HomologyProfile profile;
  for (int i = -1; i <= max_degree; ++i) {
    const auto s = static_cast<std::size_t>(i + 1);
    profile.ranks.push_back(faces[s].size() - boundary_rank[s] - boundary_rank[s + 1]);
  }
  return profile;
}

void check_limit(const SimplicialComplex& d, std::size_t universe_limit) {
  if (d.universe().size() > universe_limit)
    throw LimitExceeded("homology: universe of " + std::to_string(d.universe().size()) +
                        " vertices exceeds the limit of " + std::to_string(universe_limit));
  if (d.is_void()) throw PreconditionError("homology of the void complex is undefined");
}

std::optional<ReisnerWitness> reisner_failure(const SimplicialComplex& d, const FieldSpec& field) {
  const int dim = d.dimension();
  if (dim < 1) return std::nullopt;
  // A link of dimension <= 0 has no homology below its dimension to check.
  const auto faces = faces_up_to(d, dim - 1);
  for (const auto& layer : faces) {
    for (Mask f : layer) {
      const auto lk = link(d, f);
      const int lk_dim = lk.dimension();
      if (lk_dim < 1) continue;
      const auto profile = homology_upto(lk, field, lk_dim - 1);
      for (int i = 0; i < lk_dim; ++i)
        if (profile.betti(i) != 0) return ReisnerWitness{d.universe().labels_of(f), i};
    }
  }
  return std::nullopt;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& field, std::size_t universe_limit) {
  check_limit(d, universe_limit);
  return homology_upto(d, field, d.dimension());
}

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& field, std::size_t universe_limit) {
  check_limit(d, universe_limit);
  CohenMacaulayResult result;
  result.witness = reisner_failure(d, field);
  result.holds = !result.witness.has_value();
  return result;
}

SequentialCmResult is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& field, std::size_t universe_limit) {
  check_limit(d, universe_limit);
  SequentialCmResult result;
  for (int k = -1; k <= d.dimension(); ++k) {
    if (auto w = reisner_failure(pure_skeleton(d, k), field)) {
      result.holds = false;
      result.failing_skeleton = k;
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

bool is_unmixed(const Clutter& c) {
  const auto covers = minimal_vertex_covers(c);
  return std::all_of(covers.begin(), covers.end(),
                     [&](Mask m) { return popcount(m) == popcount(covers.front()); });
}

}  // namespace shellkit
