#include "shellkit/selftest.hpp"

#include <ostream>

#include "shellkit/digraph.hpp"
#include "shellkit/generators.hpp"
#include "shellkit/homology.hpp"
#include "shellkit/ideal.hpp"
#include "shellkit/io.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

bool SelftestReport::ok() const {
  for (const auto& s : suites)
    if (s.failures != 0) return false;
  return true;
}

namespace {

template <typename Body>
void suite(SelftestReport& report, std::ostream& log, const std::string& name, Body body) {
  SelftestSuite s{name};
  auto check = [&s](bool ok) {
    ++s.cases;
    if (!ok) ++s.failures;
  };
  body(check);
  log << "selftest " << name << ": " << (s.failures == 0 ? "ok" : "FAILED") << " (" << s.cases << " cases, "
      << s.failures << " failures)\n";
  report.suites.push_back(s);
}

}  // namespace

SelftestReport run_selftest(std::ostream& log) {
  SelftestReport report;

  suite(report, log, "bipartite-recursion-vs-brute-force-vs-scm", [](auto check) {
    for (std::size_t a = 1; a <= 3; ++a)
      for (std::size_t b = a; a + b <= 5; ++b)
        gen::for_each_bipartite(a, b, [&](const Graph& g) {
          const auto d = independence_complex(g);
          const auto r = shell_bipartite(g);
          const bool brute = find_shelling_bruteforce(d).has_value();
          const bool scm = is_sequentially_cm(d).holds;
          check(r.certificate.has_value() == brute && brute == scm && (!r.certificate || certifies(*r.certificate, d)));
        });
  });

  suite(report, log, "chordal-certificates-and-linear-quotients", [](auto check) {
    gen::Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = gen::random_chordal(2 + trial % 9, rng);
      const auto d = independence_complex(g);
      bool ok = certifies(shell_chordal(g), d) && is_sequentially_cm(d).holds;
      if (g.edge_count() > 0) ok = ok && has_linear_quotients(alexander_dual(edge_ideal(graph_clutter(g))).generators());
      check(ok);
    }
  });

  suite(report, log, "digraph-classification-vs-reisner", [](auto check) {
    for (std::size_t g = 1; g <= 3; ++g)
      gen::for_each_matched_bipartite(g, [&](const MatchedBipartite& m) {
        const auto d = independence_complex(m.graph);
        const bool direct = d.dimension() == static_cast<int>(g) - 1 && is_cohen_macaulay(d).holds;
        const bool unmixed = is_unmixed(graph_clutter(m.graph));
        check(classify_cm_bipartite(m).cohen_macaulay == direct && is_transitive(build_digraph(m)).holds == unmixed);
      });
  });

  suite(report, log, "f-forest-vs-totally-balanced-vs-free-vertex", [](auto check) {
    gen::for_each_clutter(4, 4, [&](const Clutter& c) {
      const bool forest = is_f_forest(c);
      const bool tb = is_totally_balanced(c).holds;
      const bool fvp = has_free_vertex_property(c).holds;
      check(forest == tb && (!tb || fvp) && forest == is_f_forest(c, ForestCheck::greedy));
    });
  });

  suite(report, log, "free-vertex-certificates", [](auto check) {
    gen::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const auto c = gen::random_f_forest(7, 5, rng);
      const auto r = shell_free_vertex_clutter(c);
      check(r.certificate && certifies(*r.certificate, from_minimal_covers(c)));
    }
  });

  suite(report, log, "certificate-json-round-trip", [](auto check) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto d = independence_complex(gen::random_graph(6, 0.4, rng));
      const auto c = find_shelling_bruteforce(d);
      if (!c) continue;
      const auto text = io::certificate_to_json(*c).dump();
      const auto back = io::materialize(io::certificate_from_json(nlohmann::json::parse(text)), d.universe());
      check(back && *back == *c && certifies(*back, d));
    }
  });

  return report;
}

}  // namespace shellkit
