#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "json.hpp"
#include "shellkit/digraph.hpp"
#include "shellkit/homology.hpp"
#include "shellkit/ideal.hpp"
#include "shellkit/io.hpp"
#include "shellkit/selftest.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "shellkit/1";

enum class Format { graph, complex, clutter, ideal };

enum class Answer { yes, no, inconclusive };

struct Verdict {
  std::string question;
  Answer answer = Answer::no;
  std::string method;
  std::optional<json> certificate;
  json details = json::object();
};

struct Input {
  Format format;
  std::optional<Graph> graph;
  std::optional<SimplicialComplex> complex;
  std::optional<Clutter> clutter;
  std::optional<SquarefreeMonomialIdeal> ideal;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Format parse_format(const std::string& name) {
  if (name == "graph") return Format::graph;
  if (name == "complex") return Format::complex;
  if (name == "clutter") return Format::clutter;
  if (name == "ideal") return Format::ideal;
  throw UsageError("unknown format '" + name + "'");
}

Format infer_format(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return parse_format(explicit_format);
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const auto ext = path.substr(dot + 1);
    if (ext == "graph" || ext == "complex" || ext == "clutter" || ext == "ideal") return parse_format(ext);
  }
  throw UsageError("cannot infer the format of '" + path + "'; pass --format");
}

Input load(const std::string& path, const std::string& explicit_format) {
  Input in{infer_format(path, explicit_format)};
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    text = io::read_file(path);
  }
  switch (in.format) {
    case Format::graph:
      in.graph = io::parse_graph(text);
      break;
    case Format::complex:
      in.complex = io::parse_complex(text);
      break;
    case Format::clutter:
      in.clutter = io::parse_clutter(text);
      break;
    case Format::ideal:
      in.ideal = io::parse_ideal(text);
      in.clutter = in.ideal->clutter();
      break;
  }
  return in;
}

SimplicialComplex complex_of(const Input& in) {
  if (in.graph) return independence_complex(*in.graph);
  if (in.complex) return *in.complex;
  return from_minimal_covers(*in.clutter);
}

Clutter clutter_of(const Input& in, const std::string& command) {
  if (in.clutter) return *in.clutter;
  if (in.graph) return graph_clutter(*in.graph);
  throw UsageError(command + " needs a graph, clutter or ideal input");
}

const Graph& graph_of(const Input& in, const std::string& what) {
  if (!in.graph) throw UsageError(what + " needs a graph input");
  return *in.graph;
}

json label_sets(const std::vector<std::vector<Label>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

json mask_sets(const Universe& u, const std::vector<Mask>& sets) {
  json out = json::array();
  for (Mask m : sets) out.push_back(u.labels_of(m));
  return out;
}

json trace_json(const std::vector<RecursionStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"depth", s.depth}, {"action", s.action}, {"vertices", s.vertices}});
  return out;
}

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::yes:
      return "true";
    case Answer::no:
      return "false";
    case Answer::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

int exit_code(Answer a) {
  switch (a) {
    case Answer::yes:
      return kTrue;
    case Answer::no:
      return kFalse;
    case Answer::inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

void print_text_value(std::ostream& out, const std::string& key, const json& value) {
  if (value.is_array() && !value.empty() && value.front().is_array()) {
    out << key << ":\n";
    for (const auto& row : value) {
      std::vector<std::string> parts;
      for (const auto& v : row) parts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      out << "  " << (parts.empty() ? "{}" : join_labels(parts)) << "\n";
    }
  } else if (value.is_array() && !value.empty() && value.front().is_object()) {
    out << key << ": " << value.size() << " entries\n";
  } else if (value.is_array()) {
    std::vector<std::string> parts;
    for (const auto& v : value) parts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    out << key << ": " << join_labels(parts) << "\n";
  } else {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

int emit(const Verdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = {{"schema", kSchema}, {"question", v.question}, {"method", v.method}};
    doc["answer"] = v.answer == Answer::inconclusive ? json("inconclusive") : json(v.answer == Answer::yes);
    if (v.certificate) doc["certificate"] = *v.certificate;
    if (!v.details.empty()) doc["details"] = v.details;
    out << doc.dump(2) << "\n";
  } else {
    out << v.question << ": " << answer_name(v.answer) << " (method: " << v.method << ")\n";
    for (const auto& [key, value] : v.details.items())
      if (key != "trace") print_text_value(out, key, value);
    if (v.certificate) print_text_value(out, "order", v.certificate->at("order"));
  }
  return exit_code(v.answer);
}

struct Limits {
  std::size_t facets = kDefaultFacetLimit;
  std::size_t universe = kDefaultUniverseLimit;
  std::size_t clutter_vertices = kDefaultFreeVertexLimit;
  std::size_t matrix = kDefaultMatrixLimit;
  std::size_t forest_edges = kDefaultForestEdgeLimit;
};

void warn_limits(const Limits& l, std::ostream& err) {
  auto check = [&err](const char* flag, std::size_t value, std::size_t def) {
    if (value > def)
      err << "warning: " << flag << " " << value << " exceeds the default " << def << "; this may be slow\n";
  };
  check("--facet-limit", l.facets, kDefaultFacetLimit);
  check("--universe-limit", l.universe, kDefaultUniverseLimit);
  check("--vertex-limit", l.clutter_vertices, kDefaultFreeVertexLimit);
  check("--matrix-limit", l.matrix, kDefaultMatrixLimit);
  check("--edge-limit", l.forest_edges, kDefaultForestEdgeLimit);
}

Verdict yes_with(const std::string& method, const ShellingCertificate& c, const SimplicialComplex& d) {
  if (!certifies(c, d)) throw std::logic_error(method + " produced a certificate that does not verify");
  Verdict v{"shellable", Answer::yes, method};
  v.certificate = io::certificate_to_json(c);
  return v;
}

Verdict shell_by_bipartite(const Graph& g, const SimplicialComplex& d) {
  if (!bipartition(g)) throw UsageError("method bipartite needs a bipartite graph");
  const auto r = shell_bipartite(g);
  Verdict v = r.certificate ? yes_with("bipartite", *r.certificate, d) : Verdict{"shellable", Answer::no, "bipartite"};
  if (!r.certificate) {
    v.details["reason"] = "no degree-1 vertex";
    v.details["failing_node"] = r.failing_node->vertices().labels();
  }
  v.details["trace"] = trace_json(r.trace);
  return v;
}

Verdict shell_by_chordal(const Graph& g, const SimplicialComplex& d) {
  if (!is_chordal(g)) throw UsageError("method chordal needs a chordal graph");
  return yes_with("chordal", shell_chordal(g), d);
}

Verdict shell_by_brute(const SimplicialComplex& d, std::size_t limit, const std::string& method = "brute") {
  const auto c = find_shelling_bruteforce(d, limit);
  if (c) return yes_with(method, *c, d);
  Verdict v{"shellable", Answer::no, method};
  v.details["reason"] = "no facet order is a shelling";
  return v;
}

Verdict shell_by_fvp(const Clutter& c, const SimplicialComplex& d) {
  const auto r = shell_free_vertex_clutter(c);
  Verdict v = r.certificate ? yes_with("clutter-fvp", *r.certificate, d)
                            : Verdict{"shellable", Answer::inconclusive, "clutter-fvp"};
  if (!r.certificate) {
    v.details["reason"] = "free-vertex recursion failed";
    v.details["failing_minor"] = label_sets(r.failing_minor->label_edges());
  }
  v.details["trace"] = trace_json(r.trace);
  return v;
}

Verdict check_certificate(const std::string& path, const SimplicialComplex& d) {
  json doc;
  try {
    doc = json::parse(io::read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate is not JSON: ") + e.what());
  }
  if (doc.contains("certificate")) doc = doc.at("certificate");
  const auto parsed = io::certificate_from_json(doc);
  Verdict v{"shellable", Answer::no, "certificate"};
  if (!parsed.witnesses.empty() || parsed.order.size() <= 1) {
    const auto c = io::materialize(parsed, d.universe());
    if (c && certifies(*c, d)) {
      v.answer = Answer::yes;
      v.certificate = io::certificate_to_json(*c);
    } else {
      v.details["reason"] = "certificate does not verify";
    }
    return v;
  }
  try {
    const auto r = verify_shelling(d, parsed.order);
    if (r.ok()) {
      v.answer = Answer::yes;
      v.certificate = io::certificate_to_json(*r.certificate);
    } else {
      v.details["reason"] = "pair fails the shelling condition";
      v.details["failing_pair"] = {r.counterexample->first + 1, r.counterexample->second + 1};
    }
  } catch (const PreconditionError& e) {
    v.details["reason"] = e.what();
  }
  return v;
}

Verdict run_shellable(const Input& in, const std::string& method, const std::string& certificate,
                      const Limits& limits) {
  const auto d = complex_of(in);
  if (!certificate.empty()) return check_certificate(certificate, d);
  if (method == "bipartite") return shell_by_bipartite(graph_of(in, "method bipartite"), d);
  if (method == "chordal") return shell_by_chordal(graph_of(in, "method chordal"), d);
  if (method == "brute") return shell_by_brute(d, limits.facets);
  if (method == "clutter-fvp") return shell_by_fvp(clutter_of(in, "method clutter-fvp"), d);
  // auto
  if (in.graph) {
    if (bipartition(*in.graph)) return shell_by_bipartite(*in.graph, d);
    if (is_chordal(*in.graph)) return shell_by_chordal(*in.graph, d);
    return shell_by_brute(d, limits.facets);
  }
  if (in.clutter) {
    auto v = shell_by_fvp(*in.clutter, d);
    if (v.answer != Answer::inconclusive) return v;
    if (d.facet_count() <= limits.facets) {
      auto b = shell_by_brute(d, limits.facets, "clutter-fvp+brute");
      b.details["fallback_reason"] = "free-vertex recursion failed";
      return b;
    }
    v.details["fallback_skipped"] = "facet count " + std::to_string(d.facet_count()) + " exceeds --facet-limit";
    return v;
  }
  return shell_by_brute(d, limits.facets);
}

json witness_json(const ReisnerWitness& w) { return {{"face", w.face}, {"degree", w.degree}}; }

FieldSpec field_of(std::uint64_t p) { return p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p); }

Verdict run_scm(const Input& in, std::uint64_t p, const Limits& limits) {
  const auto field = field_of(p);
  const auto r = is_sequentially_cm(complex_of(in), field, limits.universe);
  Verdict v{"seq_cm", r.holds ? Answer::yes : Answer::no, "duval-reisner"};
  v.details["field"] = field.name();
  if (r.failing_skeleton) v.details["failing_skeleton"] = *r.failing_skeleton;
  if (r.witness) v.details["witness"] = witness_json(*r.witness);
  return v;
}

Verdict run_cm(const Input& in, std::uint64_t p, const Limits& limits) {
  const auto field = field_of(p);
  const auto r = is_cohen_macaulay(complex_of(in), field, limits.universe);
  Verdict v{"cm", r.holds ? Answer::yes : Answer::no, "reisner"};
  v.details["field"] = field.name();
  if (r.witness) v.details["witness"] = witness_json(*r.witness);
  return v;
}

SquarefreeMonomialIdeal ideal_of(const Input& in, const std::string& command) {
  if (in.ideal) return *in.ideal;
  return edge_ideal(clutter_of(in, command));
}

int run_dual(const Input& in, bool as_json, std::ostream& out) {
  const auto dual = alexander_dual(ideal_of(in, "dual"));
  if (as_json) {
    out << json{{"schema", kSchema}, {"command", "dual"}, {"generators", label_sets(dual.label_generators())}}.dump(2)
        << "\n";
  } else {
    out << io::format_generators(dual.variables(), dual.generators());
  }
  return kTrue;
}

int run_linquot(const Input& in, bool use_dual, std::optional<int> degree, bool as_json, std::ostream& out) {
  auto ideal = ideal_of(in, "linquot");
  if (use_dual) ideal = alexander_dual(ideal);
  const auto& u = ideal.variables();
  const auto gens = degree ? degree_component(ideal, *degree) : ideal.generators();
  Verdict v{"linear_quotients", Answer::no, "greedy-backtracking"};
  v.details["generators"] = mask_sets(u, gens);
  const auto r = gens.empty() ? std::nullopt : has_linear_quotients(gens);
  if (gens.empty()) v.details["reason"] = "no generators";
  if (r) {
    v.answer = Answer::yes;
    v.certificate = json{{"order", mask_sets(u, r->order)}, {"colons", mask_sets(u, r->colons)}};
  }
  if (as_json) return emit(v, true, out);
  out << "linear_quotients: " << answer_name(v.answer) << "\n";
  if (r) {
    out << io::format_generators(u, r->order);
    out << "# colons " << json(v.certificate->at("colons")).dump() << "\n";
  }
  return exit_code(v.answer);
}

Verdict run_clutter(const Input& in, const std::string& property, const Limits& limits) {
  const auto c = clutter_of(in, "clutter");
  if (property == "fvp") {
    const auto r = has_free_vertex_property(c, limits.clutter_vertices);
    Verdict v{"free_vertex_property", r.holds ? Answer::yes : Answer::no, "minor-enumeration"};
    if (r.witness) v.details["witness_minor"] = label_sets(r.witness->label_edges());
    return v;
  }
  if (property == "tb") {
    const auto r = is_totally_balanced(c, limits.matrix);
    Verdict v{"totally_balanced", r.holds ? Answer::yes : Answer::no, "submatrix-search"};
    if (!r.holds) {
      v.details["rows"] = r.rows;
      json cols = json::array();
      for (auto k : r.columns) cols.push_back(c.vertices().labels_of(c.edges()[k]));
      v.details["columns"] = cols;
    }
    return v;
  }
  if (property == "forest" || property == "forest-greedy") {
    const bool greedy = property == "forest-greedy";
    const bool holds = is_f_forest(c, greedy ? ForestCheck::greedy : ForestCheck::exhaustive, limits.forest_edges);
    return Verdict{"f_forest", holds ? Answer::yes : Answer::no, greedy ? "greedy-leaf-removal" : "exhaustive"};
  }
  const bool holds = is_unmixed(c);
  Verdict v{"unmixed", holds ? Answer::yes : Answer::no, "cover-enumeration"};
  json sizes = json::array();
  for (Mask m : minimal_vertex_covers(c)) sizes.push_back(popcount(m));
  v.details["cover_sizes"] = sizes;
  return v;
}

std::vector<Edge> parse_pairs(const std::string& text) {
  std::vector<Edge> pairs;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("--pair expects x1=y1,x2=y2,...; got '" + item + "'");
    pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return pairs;
}

int run_digraph(const Input& in, const std::string& pairs, std::ostream& out) {
  const auto& g = graph_of(in, "digraph");
  std::optional<std::vector<Edge>> pairing;
  if (!pairs.empty()) pairing = parse_pairs(pairs);
  const auto m = check_conditions(g, pairing);
  const auto c = classify_cm_bipartite(m);
  json doc = {{"schema", kSchema}, {"question", "cm_bipartite_classification"}};
  doc["pairing"] = json::array();
  for (const auto& [x, y] : m.pairing) doc["pairing"].push_back({x, y});
  doc["arcs"] = json::array();
  for (const auto& [a, b] : build_digraph(m).arcs()) doc["arcs"].push_back({a, b});
  doc["acyclic"] = c.acyclicity.acyclic();
  if (c.acyclicity.order) doc["topological_order"] = *c.acyclicity.order;
  if (c.acyclicity.cycle) doc["cycle"] = *c.acyclicity.cycle;
  doc["transitive"] = c.transitivity.holds;
  if (c.transitivity.failing_triple) doc["failing_triple"] = *c.transitivity.failing_triple;
  doc["verdict"] = c.cohen_macaulay ? "cohen_macaulay" : "not_cm";
  doc["reason"] = c.reason;
  out << doc.dump(2) << "\n";
  return c.cohen_macaulay ? kTrue : kFalse;
}

void add_limits(CLI::App* app, Limits& l, bool facets, bool universe, bool clutter) {
  if (facets) app->add_option("--facet-limit", l.facets, "brute-force facet limit (default 20)");
  if (universe) app->add_option("--universe-limit", l.universe, "homology universe limit (default 24)");
  if (clutter) {
    app->add_option("--vertex-limit", l.clutter_vertices, "free-vertex-property vertex limit (default 12)");
    app->add_option("--matrix-limit", l.matrix, "totally-balanced row/column limit (default 14)");
    app->add_option("--edge-limit", l.forest_edges, "exhaustive f-forest edge limit (default 12)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shellability and sequential Cohen-Macaulayness of independence and clutter complexes", "shellkit"};
  app.require_subcommand(1);

  std::string file;
  std::string format;
  bool as_json = false;
  std::string method = "auto";
  std::string certificate;
  std::uint64_t field = 0;
  std::string property = "fvp";
  std::string pairs;
  bool use_dual = false;
  std::optional<int> degree;
  Limits limits;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file (.graph, .complex, .clutter, .ideal) or - for stdin")->required();
    sub->add_option("--format", format, "input format")->check(CLI::IsMember({"graph", "complex", "clutter", "ideal"}));
    sub->add_flag("--json", as_json, "emit a JSON verdict");
  };

  auto* shellable = app.add_subcommand("shellable", "decide shellability of Δ_G, Δ or Δ_C");
  common(shellable);
  shellable->add_option("--method", method, "algorithm")
      ->check(CLI::IsMember({"auto", "bipartite", "chordal", "brute", "clutter-fvp"}));
  shellable->add_option("--certificate", certificate, "verify this JSON certificate instead of searching");
  add_limits(shellable, limits, true, false, false);

  auto* scm = app.add_subcommand("scm", "decide sequential Cohen-Macaulayness");
  common(scm);
  scm->add_option("--field", field, "prime characteristic (default: rationals)");
  add_limits(scm, limits, false, true, false);

  auto* cm = app.add_subcommand("cm", "decide Cohen-Macaulayness (Reisner)");
  common(cm);
  cm->add_option("--field", field, "prime characteristic (default: rationals)");
  add_limits(cm, limits, false, true, false);

  auto* dual = app.add_subcommand("dual", "print the Alexander dual");
  common(dual);

  auto* linquot = app.add_subcommand("linquot", "search for an order with linear quotients");
  common(linquot);
  linquot->add_flag("--dual", use_dual, "use the Alexander dual of the input ideal");
  linquot->add_option("--degree", degree, "restrict to the squarefree degree-d component");

  auto* clutter = app.add_subcommand("clutter", "clutter properties");
  common(clutter);
  clutter->add_option("--property", property, "property to decide")
      ->check(CLI::IsMember({"fvp", "tb", "forest", "forest-greedy", "unmixed"}));
  add_limits(clutter, limits, false, false, true);

  auto* digraph = app.add_subcommand("digraph", "classify a bipartite graph through its directed graph");
  common(digraph);
  digraph->add_option("--pair", pairs, "pairing x1=y1,x2=y2,...");

  auto* selftest = app.add_subcommand("selftest", "cross-check the deciders on small exhaustive families");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  warn_limits(limits, err);
  try {
    if (selftest->parsed()) return run_selftest(out).ok() ? kTrue : kFalse;
    const auto in = load(file, format);
    if (shellable->parsed()) return emit(run_shellable(in, method, certificate, limits), as_json, out);
    if (scm->parsed()) return emit(run_scm(in, field, limits), as_json, out);
    if (cm->parsed()) return emit(run_cm(in, field, limits), as_json, out);
    if (dual->parsed()) return run_dual(in, as_json, out);
    if (linquot->parsed()) return run_linquot(in, use_dual, degree, as_json, out);
    if (clutter->parsed()) return emit(run_clutter(in, property, limits), as_json, out);
    if (digraph->parsed()) return run_digraph(in, pairs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputFormat;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimitExceeded;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kLimitExceeded;
  }
  return kUsage;
}

}  // namespace shellkit::cli
