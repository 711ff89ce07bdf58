#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shellkit {

using Label = std::string;

/// Subset of a Universe, bit i <-> i-th label in sorted order.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition (unknown vertex, wrong graph class, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Indices of set bits, ascending.
std::vector<std::size_t> indices_of(Mask m);

/// Lexicographic comparison of the ascending index sequences of `a` and `b`
/// (a proper prefix sorts first).
bool lex_less(Mask a, Mask b);

/// Size first, then lex_less.
bool size_lex_less(Mask a, Mask b);

void sort_lex(std::vector<Mask>& sets);
void sort_size_lex(std::vector<Mask>& sets);

/// Keeps the inclusion-minimal members (duplicates collapse).
std::vector<Mask> minimal_elements(std::vector<Mask> sets);
/// Keeps the inclusion-maximal members (duplicates collapse).
std::vector<Mask> maximal_elements(std::vector<Mask> sets);

bool is_antichain(std::span<const Mask> sets);

/// Throws InputError unless `label` is nonempty, has no whitespace and no "·".
void validate_label(std::string_view label);

/// Sorted, duplicate-free list of vertex labels; the index space behind Mask.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& operator[](std::size_t i) const { return labels_[i]; }
  Mask all() const { return full_mask(labels_.size()); }

  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// Throws PreconditionError naming the label when absent.
  std::size_t index_of(std::string_view label) const;
  Mask mask_of(std::span<const Label> labels) const;
  std::vector<Label> labels_of(Mask m) const;

  /// Re-expresses `m` (a subset of this universe) inside `other`, which must
  /// contain every label of `m`.
  Mask translate(Mask m, const Universe& other) const;

  Universe subset(Mask m) const;
  Universe merged(const Universe& other) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<Label> labels_;
};

std::string join_labels(std::span<const Label> labels, std::string_view sep = " ");

}  // namespace shellkit
