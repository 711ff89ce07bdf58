#include <gtest/gtest.h>

#include "shellkit/digraph.hpp"
#include "shellkit/generators.hpp"
#include "shellkit/homology.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace shellkit;
using testing_helpers::G;
using Labels = std::vector<Label>;

namespace {

MatchedBipartite matched(const std::string& edges) {
  const auto g = G(edges);
  std::vector<Edge> pairing;
  for (const auto& v : g.vertices().labels())
    if (v[0] == 'x') pairing.emplace_back(v, "y" + v.substr(1));
  return check_conditions(g, pairing);
}

MatchingErrorKind error_kind(const Graph& g, const std::optional<std::vector<Edge>>& pairing = std::nullopt) {
  try {
    check_conditions(g, pairing);
  } catch (const MatchingError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return MatchingErrorKind::not_bipartite;
}

}  // namespace

TEST(CheckConditions, Examples) {
  const auto c4 = G("x1-y1 x2-y2 x1-y2 x2-y1");
  const auto m = check_conditions(c4, std::vector<Edge>{{"x1", "y1"}, {"x2", "y2"}});
  EXPECT_EQ(m.g(), 2u);
  EXPECT_EQ(error_kind(families::complete_bipartite(1, 2)), MatchingErrorKind::unequal_sides);
  EXPECT_NO_THROW(check_conditions(G("a-b b-c c-d"), std::vector<Edge>{{"a", "b"}, {"c", "d"}}));
}

TEST(CheckConditions, ErrorTaxonomy) {
  EXPECT_EQ(error_kind(families::cycle(3)), MatchingErrorKind::not_bipartite);
  EXPECT_EQ(error_kind(G("a-b c-b")), MatchingErrorKind::unequal_sides);
  // Sides {a,c,f} and {b,d,e}; the isolated f cannot be matched.
  EXPECT_EQ(error_kind(G("a-b a-d c-b c-e f")), MatchingErrorKind::no_perfect_matching);
  EXPECT_EQ(error_kind(G("a-b b-c c-d"), std::vector<Edge>{{"a", "c"}, {"b", "d"}}),
            MatchingErrorKind::pairing_not_matching);
  EXPECT_EQ(error_kind(G("a-b b-c c-d"), std::vector<Edge>{{"a", "b"}}), MatchingErrorKind::pairing_not_matching);
  EXPECT_EQ(error_kind(G("a-b b-c c-d"), std::vector<Edge>{{"a", "b"}, {"b", "c"}}),
            MatchingErrorKind::pairing_not_matching);
  // A valid matching whose sides leave an edge inside one side.
  EXPECT_EQ(error_kind(G("a-b c-d a-c"), std::vector<Edge>{{"a", "b"}, {"c", "d"}}), MatchingErrorKind::not_bipartite);
}

TEST(CheckConditions, FindsMatchingFromSmallestLabels) {
  const auto m = check_conditions(families::acyclic_not_scm_example());
  std::vector<Edge> expected;
  for (int i = 1; i <= 5; ++i) expected.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  EXPECT_EQ(m.pairing, expected);
}

TEST(BuildDigraph, Examples) {
  const auto c4 = build_digraph(matched("x1-y1 x2-y2 x1-y2 x2-y1"));
  EXPECT_EQ(c4.arcs(), (std::vector<Edge>{{"x1", "x2"}, {"x2", "x1"}}));
  EXPECT_EQ(build_digraph(matched("x1-y1 x2-y2 x3-y3")).arc_count(), 0u);
  const auto ex = build_digraph(check_conditions(families::acyclic_not_scm_example()));
  EXPECT_EQ(ex.arcs(),
            (std::vector<Edge>{{"x1", "x2"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"}, {"x4", "x5"}}));
}

TEST(Acyclic, Examples) {
  const auto c4 = is_acyclic(build_digraph(matched("x1-y1 x2-y2 x1-y2 x2-y1")));
  EXPECT_FALSE(c4.acyclic());
  EXPECT_EQ(c4.cycle, (Labels{"x1", "x2"}));
  const auto ex = is_acyclic(build_digraph(check_conditions(families::acyclic_not_scm_example())));
  EXPECT_EQ(ex.order, (Labels{"x1", "x2", "x3", "x4", "x5"}));
  EXPECT_TRUE(is_acyclic(Digraph({"a", "b"}, {})).acyclic());
}

TEST(Acyclic, CycleWitnessIsACycle) {
  const Digraph d({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "b"}});
  const auto r = is_acyclic(d);
  ASSERT_TRUE(r.cycle);
  EXPECT_EQ(*r.cycle, (Labels{"b", "c", "d"}));
}

TEST(Acyclic, OrderPutsArcsForwardAndMatchesOracle) {
  for (std::size_t g = 1; g <= 3; ++g)
    gen::for_each_matched_bipartite(g, [](const MatchedBipartite& m) {
      const auto d = build_digraph(m);
      const auto r = is_acyclic(d);
      ASSERT_EQ(r.acyclic(), oracle::acyclic(d));
      if (r.order) {
        for (const auto& [a, b] : d.arcs()) {
          const auto pa = std::find(r.order->begin(), r.order->end(), a);
          const auto pb = std::find(r.order->begin(), r.order->end(), b);
          EXPECT_LT(pa, pb);
        }
      } else {
        const auto& c = *r.cycle;
        for (std::size_t k = 0; k < c.size(); ++k) EXPECT_TRUE(d.has_arc(c[k], c[(k + 1) % c.size()]));
      }
    });
}

TEST(Transitive, Examples) {
  const auto ex = is_transitive(build_digraph(check_conditions(families::acyclic_not_scm_example())));
  EXPECT_FALSE(ex);
  EXPECT_EQ(ex.failing_triple, (std::array<Label, 3>{"x1", "x2", "x3"}));
  EXPECT_TRUE(is_transitive(Digraph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}})));
  EXPECT_TRUE(is_transitive(Digraph({"1", "2"}, {})));
  // A 2-cycle has no triple of distinct vertices.
  EXPECT_TRUE(is_transitive(Digraph({"1", "2"}, {{"1", "2"}, {"2", "1"}})));
}

TEST(Classify, Examples) {
  const auto c4 = classify_cm_bipartite(matched("x1-y1 x2-y2 x1-y2 x2-y1"));
  EXPECT_FALSE(c4.cohen_macaulay);
  EXPECT_NE(c4.reason.find("cycle"), std::string::npos);
  const auto matching = classify_cm_bipartite(matched("x1-y1 x2-y2 x3-y3"));
  EXPECT_TRUE(matching.cohen_macaulay);
  EXPECT_TRUE(is_cohen_macaulay(independence_complex(matched("x1-y1 x2-y2 x3-y3").graph)));
  const auto ex = classify_cm_bipartite(check_conditions(families::acyclic_not_scm_example()));
  EXPECT_FALSE(ex.cohen_macaulay);
  EXPECT_NE(ex.reason.find("not transitive"), std::string::npos);
}

TEST(Classify, AgreesWithReisnerAndUnmixedness) {
  for (std::size_t g = 1; g <= 3; ++g)
    gen::for_each_matched_bipartite(g, [g](const MatchedBipartite& m) {
      const auto d = independence_complex(m.graph);
      const bool direct = d.dimension() == static_cast<int>(g) - 1 && is_cohen_macaulay(d).holds;
      ASSERT_EQ(classify_cm_bipartite(m).cohen_macaulay, direct);
      ASSERT_EQ(is_transitive(build_digraph(m)).holds, is_unmixed(graph_clutter(m.graph)));
    });
}

TEST(Classify, IndependentOfPairing) {
  for (std::size_t g = 1; g <= 3; ++g)
    gen::for_each_matched_bipartite(g, [](const MatchedBipartite& m) {
      const bool cm = classify_cm_bipartite(m).cohen_macaulay;
      const bool unmixed = is_transitive(build_digraph(m)).holds;
      for (const auto& pairing : all_perfect_matchings(m.graph, m.x_side())) {
        const auto other = check_conditions(m.graph, pairing);
        ASSERT_EQ(classify_cm_bipartite(other).cohen_macaulay, cm);
        ASSERT_EQ(is_transitive(build_digraph(other)).holds, unmixed);
      }
    });
}

TEST(Probe, Examples) {
  const auto c4 = seq_cm_implies_acyclic_probe(matched("x1-y1 x2-y2 x1-y2 x2-y1"));
  EXPECT_FALSE(c4.sequentially_cm);
  EXPECT_FALSE(c4.acyclic);
  EXPECT_TRUE(c4.implication_holds());
  const auto matching = seq_cm_implies_acyclic_probe(matched("x1-y1 x2-y2"));
  EXPECT_TRUE(matching.sequentially_cm);
  EXPECT_TRUE(matching.acyclic);
  const auto ex = seq_cm_implies_acyclic_probe(check_conditions(families::acyclic_not_scm_example()));
  EXPECT_FALSE(ex.sequentially_cm);
  EXPECT_TRUE(ex.acyclic);
}

TEST(Probe, RandomInstancesNeverViolate) {
  gen::Rng rng(139);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = 2 + trial % 4;
    const auto graph = gen::random_bipartite(g, g, 0.35, rng);
    MatchedBipartite m;
    try {
      m = check_conditions(graph);
    } catch (const MatchingError&) {
      continue;
    }
    ++checked;
    EXPECT_TRUE(seq_cm_implies_acyclic_probe(m).implication_holds());
  }
  EXPECT_GT(checked, 50);
}

TEST(SinkSource, Examples) {
  const auto tree = matched("x1-y1 x2-y2 x2-y1");
  EXPECT_EQ(build_digraph(tree).arcs(), (std::vector<Edge>{{"x2", "x1"}}));
  EXPECT_TRUE(tree_sink_source_check(tree));
  const auto caterpillar = tree_sink_source_check(matched("x1-y1 x2-y2 x3-y3 x1-y2 x2-y3"));
  EXPECT_FALSE(caterpillar);
  EXPECT_EQ(caterpillar.offending, std::optional<Label>("x2"));
  EXPECT_TRUE(tree_sink_source_check(matched("x1-y1")));
  EXPECT_THROW(tree_sink_source_check(matched("x1-y1 x2-y2")), PreconditionError);
}

TEST(SinkSource, AgreesWithClassificationOnTrees) {
  for (std::size_t g = 1; g <= 4; ++g)
    gen::for_each_matched_bipartite(g, [](const MatchedBipartite& m) {
      if (!is_tree(m.graph)) return;
      ASSERT_EQ(tree_sink_source_check(m).holds, classify_cm_bipartite(m).cohen_macaulay);
    });
}
