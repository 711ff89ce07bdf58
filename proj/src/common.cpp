#include "shellkit/common.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace shellkit {

std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool size_lex_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

void sort_lex(std::vector<Mask>& sets) { std::sort(sets.begin(), sets.end(), lex_less); }
void sort_size_lex(std::vector<Mask>& sets) { std::sort(sets.begin(), sets.end(), size_lex_less); }

std::vector<Mask> minimal_elements(std::vector<Mask> sets) {
  sort_size_lex(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [s](Mask t) { return is_subset(t, s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<Mask> maximal_elements(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return size_lex_less(b, a); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [s](Mask t) { return is_subset(s, t); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

bool is_antichain(std::span<const Mask> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && is_subset(sets[i], sets[j])) return false;
  return true;
}

void validate_label(std::string_view label) {
  if (label.empty()) throw InputError("empty vertex label");
  for (unsigned char c : label)
    if (std::isspace(c)) throw InputError("vertex label contains whitespace: '" + std::string(label) + "'");
  if (label.find("·") != std::string_view::npos)
    throw InputError("vertex label contains reserved character '·': '" + std::string(label) + "'");
}

Universe::Universe(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.size() > kMaxVertices)
    throw LimitExceeded("at most " + std::to_string(kMaxVertices) + " vertices are supported, got " +
                        std::to_string(labels_.size()));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("unknown vertex '" + std::string(label) + "'");
}

Mask Universe::mask_of(std::span<const Label> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<Label> Universe::labels_of(Mask m) const {
  std::vector<Label> out;
  for (auto i : indices_of(m)) out.push_back(labels_[i]);
  return out;
}

Mask Universe::translate(Mask m, const Universe& other) const {
  if (&other == this || other == *this) return m;
  Mask out = 0;
  for (auto i : indices_of(m)) out |= bit(other.index_of(labels_[i]));
  return out;
}

Universe Universe::subset(Mask m) const { return Universe(labels_of(m)); }

Universe Universe::merged(const Universe& other) const {
  std::vector<Label> all = labels_;
  all.insert(all.end(), other.labels_.begin(), other.labels_.end());
  return Universe(std::move(all));
}

std::string join_labels(std::span<const Label> labels, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i];
  }
  return out;
}

}  // namespace shellkit
