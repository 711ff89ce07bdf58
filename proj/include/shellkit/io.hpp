#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "shellkit/clutter.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/graph.hpp"
#include "shellkit/ideal.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit::io {

// Text readers throw InputError with a "line N:" prefix on malformed input.

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& d);

Clutter parse_clutter(std::string_view text);
std::string format_clutter(const Clutter& c);

SquarefreeMonomialIdeal parse_ideal(std::string_view text);
/// Prints generators in the given order, one per line.
std::string format_generators(const Universe& variables, const std::vector<Mask>& generators);

std::string read_file(const std::string& path);

/// {"order": [[labels]], "witnesses": [{"i","j","v","l"}]}, indices 1-based.
nlohmann::json certificate_to_json(const ShellingCertificate& c);

struct ParsedCertificate {
  std::vector<std::vector<Label>> order;
  /// Witnesses as given; indices already converted to 0-based.
  struct Entry {
    std::size_t i, j;
    Label v;
    std::size_t l;
  };
  std::vector<Entry> witnesses;
};

ParsedCertificate certificate_from_json(const nlohmann::json& j);

/// Builds a certificate over `universe` from the parsed document, checking that
/// it is complete and every witness equation holds. Returns nullopt otherwise.
std::optional<ShellingCertificate> materialize(const ParsedCertificate& p, const Universe& universe);

}  // namespace shellkit::io
