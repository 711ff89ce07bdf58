#include "shellkit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace shellkit::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  bool blank;
};

std::vector<Line> split_lines(std::string_view text, bool strip_comments) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (strip_comments) {
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    }
    std::istringstream in(raw);
    Line line{number, {}, false};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    line.blank = line.tokens.empty();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  // A trailing newline does not make a blank line.
  while (!lines.empty() && lines.back().blank) lines.pop_back();
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

void check_label(std::size_t line, const std::string& label) {
  try {
    validate_label(label);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

std::vector<Label> unique_sorted(std::vector<Label> v, std::size_t line) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) fail(line, "repeated label");
  return v;
}

std::string format_sets(const std::vector<std::vector<Label>>& sets, std::string_view empty_token) {
  std::string out;
  for (const auto& s : sets) {
    out += s.empty() ? std::string(empty_token) : join_labels(s);
    out += '\n';
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::set<Label> vertices;
  std::vector<Edge> edges;
  for (const auto& line : split_lines(text, true)) {
    if (line.blank) continue;
    const auto& t = line.tokens;
    if (t[0] == "v") {
      if (t.size() != 2) fail(line.number, "expected 'v LABEL'");
      check_label(line.number, t[1]);
      vertices.insert(t[1]);
    } else if (t[0] == "e") {
      if (t.size() != 3) fail(line.number, "expected 'e LABEL1 LABEL2'");
      check_label(line.number, t[1]);
      check_label(line.number, t[2]);
      if (t[1] == t[2]) fail(line.number, "loop at '" + t[1] + "'");
      vertices.insert(t[1]);
      vertices.insert(t[2]);
      edges.emplace_back(t[1], t[2]);
    } else {
      fail(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  return Graph::from_edges({vertices.begin(), vertices.end()}, edges);
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (const auto& v : isolated_vertices(g)) out += "v " + v + "\n";
  for (const auto& [a, b] : g.edges()) out += "e " + a + " " + b + "\n";
  return out;
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<Label>> facets;
  for (const auto& line : split_lines(text, false)) {
    if (line.blank) fail(line.number, "blank line");
    if (line.tokens.size() == 1 && line.tokens[0] == "EMPTYFACET") {
      facets.emplace_back();
      continue;
    }
    for (const auto& t : line.tokens) {
      if (t == "EMPTYFACET") fail(line.number, "EMPTYFACET must stand alone");
      check_label(line.number, t);
    }
    facets.push_back(unique_sorted(line.tokens, line.number));
  }
  std::set<Label> all;
  for (const auto& f : facets) all.insert(f.begin(), f.end());
  const Universe u({all.begin(), all.end()});
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(u.mask_of(f));
  // Listed faces need not be maximal: the complex they generate is meant.
  return SimplicialComplex::generated_by(u, masks);
}

std::string format_complex(const SimplicialComplex& d) { return format_sets(d.label_facets(), "EMPTYFACET"); }

Clutter parse_clutter(std::string_view text) {
  std::vector<std::vector<Label>> edges;
  std::vector<Label> extra;
  bool seen_edge = false;
  for (const auto& line : split_lines(text, true)) {
    if (line.blank) continue;
    if (line.tokens[0] == "vertices:") {
      if (seen_edge || !extra.empty()) fail(line.number, "'vertices:' header must come first");
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        check_label(line.number, line.tokens[k]);
        extra.push_back(line.tokens[k]);
      }
      continue;
    }
    for (const auto& t : line.tokens) check_label(line.number, t);
    edges.push_back(unique_sorted(line.tokens, line.number));
    seen_edge = true;
  }
  if (edges.empty()) throw InputError("clutter has no edges");
  try {
    return Clutter::from_label_edges(edges, extra);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

std::string format_clutter(const Clutter& c) {
  std::string out;
  const Mask stray = c.vertices().all() & ~c.support();
  if (stray) out += "vertices: " + join_labels(c.vertices().labels()) + "\n";
  return out + format_sets(c.label_edges(), "");
}

SquarefreeMonomialIdeal parse_ideal(std::string_view text) {
  std::vector<std::vector<Label>> gens;
  std::set<Label> all;
  for (const auto& line : split_lines(text, true)) {
    if (line.blank) continue;
    for (const auto& t : line.tokens) check_label(line.number, t);
    gens.push_back(unique_sorted(line.tokens, line.number));
    all.insert(line.tokens.begin(), line.tokens.end());
  }
  if (gens.empty()) throw InputError("ideal has no generators");
  const Universe u({all.begin(), all.end()});
  std::vector<Mask> masks;
  for (const auto& g : gens) masks.push_back(u.mask_of(g));
  return SquarefreeMonomialIdeal::generated_by(u, masks);
}

std::string format_generators(const Universe& variables, const std::vector<Mask>& generators) {
  std::vector<std::vector<Label>> sets;
  for (Mask m : generators) sets.push_back(variables.labels_of(m));
  return format_sets(sets, "1");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json certificate_to_json(const ShellingCertificate& c) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& f : c.label_order()) order.push_back(f);
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : c.witnesses)
    witnesses.push_back({{"i", w.i + 1}, {"j", w.j + 1}, {"v", c.universe[w.vertex]}, {"l", w.ell + 1}});
  return {{"order", order}, {"witnesses", witnesses}};
}

ParsedCertificate certificate_from_json(const nlohmann::json& j) {
  ParsedCertificate p;
  try {
    for (const auto& f : j.at("order")) {
      std::vector<Label> facet = f.get<std::vector<Label>>();
      for (const auto& v : facet) validate_label(v);
      p.order.push_back(std::move(facet));
    }
    if (j.contains("witnesses")) {
      for (const auto& w : j.at("witnesses")) {
        const auto i = w.at("i").get<std::size_t>();
        const auto jj = w.at("j").get<std::size_t>();
        const auto l = w.at("l").get<std::size_t>();
        if (i == 0 || jj == 0 || l == 0) throw InputError("certificate indices are 1-based");
        p.witnesses.push_back({i - 1, jj - 1, w.at("v").get<Label>(), l - 1});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  return p;
}

std::optional<ShellingCertificate> materialize(const ParsedCertificate& p, const Universe& universe) {
  ShellingCertificate c;
  c.universe = universe;
  for (const auto& f : p.order) {
    for (const auto& v : f)
      if (!universe.contains(v)) return std::nullopt;
    c.order.push_back(universe.mask_of(f));
  }
  const std::size_t s = c.order.size();
  if (p.witnesses.size() != s * (s - (s > 0 ? 1 : 0)) / 2) return std::nullopt;
  c.witnesses.resize(p.witnesses.size());
  std::vector<bool> filled(p.witnesses.size(), false);
  for (const auto& w : p.witnesses) {
    if (w.i >= w.j || w.j >= s || w.l >= s || !universe.contains(w.v)) return std::nullopt;
    const auto slot = w.j * (w.j - 1) / 2 + w.i;
    if (filled[slot]) return std::nullopt;
    filled[slot] = true;
    c.witnesses[slot] = {w.i, w.j, universe.index_of(w.v), w.l};
  }
  if (!recheck_certificate(c)) return std::nullopt;
  return c;
}

}  // namespace shellkit::io
