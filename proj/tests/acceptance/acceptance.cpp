// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "shellkit/clutter.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/digraph.hpp"
#include "shellkit/generators.hpp"
#include "shellkit/graph.hpp"
#include "shellkit/homology.hpp"
#include "shellkit/ideal.hpp"
#include "shellkit/io.hpp"
#include "shellkit/shelling.hpp"
#include "support/oracles.hpp"

using namespace shellkit;

namespace {

constexpr std::size_t kBruteLimit = 64;

/// Counts checks and keeps the first few failure descriptions.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) notes_.push_back(describe());
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string show(const Graph& g) {
  std::string s = io::format_graph(g);
  for (auto& ch : s)
    if (ch == '\n') ch = ';';
  return s;
}

std::string show(const Clutter& c) {
  std::string s = io::format_clutter(c);
  for (auto& ch : s)
    if (ch == '\n') ch = ';';
  return s;
}

bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::string crash;
  try {
    body(t);
  } catch (const std::exception& e) {
    crash = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = crash.empty() && t.failures() == 0 && in_time;
  std::printf("%s criterion %d: %s (%zu checks, %zu failures, %.2fs of %.0fs)\n", pass ? "PASS" : "FAIL", number,
              title.c_str(), t.checks(), t.failures(), secs, budget_seconds);
  for (const auto& n : t.notes()) std::printf("    failure: %s\n", n.c_str());
  if (!crash.empty()) std::printf("    exception: %s\n", crash.c_str());
  if (!in_time) std::printf("    exceeded the time budget\n");
  std::fflush(stdout);
  return pass;
}

/// Every labeled bipartite graph on a+b <= 6 vertices followed by 2000 random
/// ones on 7 to 9 vertices.
void for_each_bipartite_family(const std::function<void(const Graph&)>& f) {
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; a + b <= 6; ++b) gen::for_each_bipartite(a, b, f);
  gen::Rng rng(20240611);
  std::uniform_int_distribution<std::size_t> order(7, 9);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = order(rng);
    const std::size_t a = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    f(gen::random_bipartite(a, n - a, density(rng), rng));
  }
}

void criterion1(Tally& t) {
  for (std::size_t n : {3u, 5u}) {
    const auto d = independence_complex(families::cycle(n));
    t.check(is_sequentially_cm(d).holds, [n] { return "C" + std::to_string(n) + " should be seq-CM"; });
  }
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto g = families::cycle(n);
    const auto d = independence_complex(g);
    t.check(!is_sequentially_cm(d).holds, [n] { return "C" + std::to_string(n) + " should not be seq-CM"; });
    t.check(!find_shelling_bruteforce(d, kBruteLimit), [n] { return "C" + std::to_string(n) + " brute-force shelled"; });
    t.check(!shell_bipartite(g).certificate, [n] { return "C" + std::to_string(n) + " recursion shelled"; });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : {families::complete_bipartite(1, n), families::complete_bipartite(n, 1)}) {
      const auto d = independence_complex(g);
      const auto c = shell_bipartite(g).certificate;
      t.check(c && certifies(*c, d), [&] { return "star not shelled: " + show(g); });
      t.check(find_shelling_bruteforce(d, kBruteLimit).has_value(), [&] { return "star brute: " + show(g); });
    }
  }
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto g = families::complete_bipartite(m, n);
      const auto d = independence_complex(g);
      t.check(!shell_bipartite(g).certificate, [&] { return "K_{m,n} shelled: " + show(g); });
      t.check(!find_shelling_bruteforce(d, kBruteLimit), [&] { return "K_{m,n} brute: " + show(g); });
    }
}

void criterion2(Tally& t) {
  for_each_bipartite_family([&](const Graph& g) {
    const auto d = independence_complex(g);
    const auto rec = shell_bipartite(g);
    const auto brute = find_shelling_bruteforce(d, kBruteLimit);
    const bool scm = is_sequentially_cm(d).holds;
    const bool r = rec.certificate.has_value();
    t.check(r == brute.has_value() && r == scm, [&] {
      std::ostringstream s;
      s << show(g) << " recursion=" << r << " brute=" << brute.has_value() << " scm=" << scm;
      return s.str();
    });
    if (r) t.check(certifies(*rec.certificate, d), [&] { return "bad certificate: " + show(g); });
  });
}

void criterion3(Tally& t) {
  gen::Rng rng(8675309);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen::random_chordal(order(rng), rng);
    t.check(is_chordal(g).has_value(), [&] { return "generator produced a non-chordal graph: " + show(g); });
    const auto d = independence_complex(g);
    const auto c = shell_chordal(g);
    t.check(verify_shelling(d, c.order).ok() && certifies(c, d), [&] { return "certificate rejected: " + show(g); });
    t.check(is_sequentially_cm(d).holds, [&] { return "not seq-CM: " + show(g); });
    if (g.edge_count() == 0) continue;
    const auto dual = alexander_dual(edge_ideal(graph_clutter(g)));
    t.check(has_linear_quotients(dual.generators()).has_value(),
            [&] { return "dual lacks linear quotients: " + show(g); });
  }
}

void criterion4(Tally& t) {
  for (std::size_t g = 1; g <= 4; ++g)
    gen::for_each_matched_bipartite(g, [&](const MatchedBipartite& m) {
      const auto d = independence_complex(m.graph);
      const bool cm = is_cohen_macaulay(d).holds && d.dimension() == static_cast<int>(g) - 1;
      const auto cls = classify_cm_bipartite(m);
      t.check(cls.cohen_macaulay == cm, [&] { return "classification vs Reisner: " + show(m.graph); });
      const bool transitive = is_transitive(build_digraph(m)).holds;
      t.check(transitive == is_unmixed(graph_clutter(m.graph)),
              [&] { return "transitive vs unmixed: " + show(m.graph); });
    });
  const auto ex = check_conditions(families::acyclic_not_scm_example());
  const auto digraph = build_digraph(ex);
  t.check(is_acyclic(digraph).acyclic(), [] { return "example digraph should be acyclic"; });
  t.check(!is_transitive(digraph).holds, [] { return "example digraph should not be transitive"; });
  t.check(!is_sequentially_cm(independence_complex(ex.graph)).holds, [] { return "example should not be seq-CM"; });
}

void criterion5(Tally& t) {
  for (std::size_t n = 1; n <= 5; ++n)
    gen::for_each_clutter(n, 5, [&](const Clutter& c) {
      const bool tb = is_totally_balanced(c).holds;
      t.check(is_f_forest(c) == tb, [&] { return "f-forest vs totally balanced: " + show(c); });
      if (tb) t.check(has_free_vertex_property(c).holds, [&] { return "totally balanced without fvp: " + show(c); });
    });
  gen::Rng rng(1729);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = gen::random_f_forest(10, 8, rng);
    const auto d = from_minimal_covers(c);
    const auto s = shell_free_vertex_clutter(c);
    t.check(s.certificate && verify_shelling(d, s.certificate->order).ok() && certifies(*s.certificate, d),
            [&] { return "free-vertex shelling rejected: " + show(c); });
    t.check(is_sequentially_cm(d).holds, [&] { return "f-forest complex not seq-CM: " + show(c); });
  }
}

void criterion6(Tally& t) {
  gen::Rng rng(4242);
  std::uniform_int_distribution<std::size_t> order(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = gen::random_graph(order(rng), density(rng), rng);
    const auto d = independence_complex(g);
    if (const auto c = find_shelling_bruteforce(d, kBruteLimit)) {
      for (const auto& x : g.vertices().labels()) {
        const auto r = restrict_shelling_to_link(*c, x);
        const auto lk = link(d, std::vector<Label>{x});
        t.check(verify_shelling(lk, r.order).ok(), [&] { return "link of " + x + " not shelled: " + show(g); });
      }
    }
    if (is_sequentially_cm(d).holds) {
      for (const auto& x : g.vertices().labels()) {
        const auto h = delete_closed_neighborhood(g, x);
        t.check(is_sequentially_cm(independence_complex(h)).holds,
                [&] { return "deleting N[" + x + "] loses seq-CM: " + show(g); });
      }
    }
  }
}

void criterion7(Tally& t) {
  for (std::size_t n = 1; n <= 5; ++n)
    gen::for_each_clutter(n, 1u << n, [&](const Clutter& c) {
      const auto& u = c.vertices();
      const auto covers = oracle::sorted(minimal_vertex_covers(c));
      for (const auto& x : free_vertices(c)) {
        const Mask xn = Mask{1} << u.index_of(x);
        Mask a = 0;
        std::vector<Mask> rest;
        for (Mask e : c.edges()) {
          if (e & xn)
            a = e & ~xn;
          else
            rest.push_back(e);
        }
        const auto zero_minor = Clutter::minimalized(u, rest);
        std::vector<Mask> expect_a;
        for (Mask cp : oracle::minimal_covers(zero_minor))
          if (!(cp & a)) expect_a.push_back(cp | xn);
        std::vector<Mask> got_a, got_b;
        for (Mask cover : covers) (cover & xn ? got_a : got_b).push_back(cover);
        t.check(oracle::sorted(expect_a) == got_a, [&] { return "covers with " + x + ": " + show(c); });

        std::vector<Mask> replaced = rest;
        replaced.push_back(a);
        std::vector<Mask> expect_b;
        if (a != 0) expect_b = oracle::minimal_covers(Clutter::minimalized(u, replaced));
        t.check(oracle::sorted(expect_b) == got_b, [&] { return "covers without " + x + ": " + show(c); });
      }
    });

  for_each_bipartite_family([&](const Graph& g) {
    if (!isolated_vertices(g).empty() || g.empty()) return;
    const auto d = independence_complex(g);
    const bool shellable = find_shelling_bruteforce(d, kBruteLimit).has_value();
    const bool scm = is_sequentially_cm(d).holds;
    if (!shellable && !scm) return;
    t.check(!degree_one_vertices(g).empty(), [&] { return "no degree-1 vertex: " + show(g); });
  });
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "cycle and complete bipartite fixtures", 10, criterion1);
  ok &= run_criterion(2, "bipartite recursion vs brute force vs seq-CM", 600, criterion2);
  ok &= run_criterion(3, "chordal certificates, seq-CM and linear quotients", 300, criterion3);
  ok &= run_criterion(4, "digraph classification vs Reisner, transitive vs unmixed", 600, criterion4);
  ok &= run_criterion(5, "f-forests, total balance and free-vertex shellings", 900, criterion5);
  ok &= run_criterion(6, "link restriction and closed-neighborhood deletion", 600, criterion6);
  ok &= run_criterion(7, "free-vertex cover decomposition and degree-1 vertices", 600, criterion7);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME FAILED");
  return ok ? 0 : 1;
}
