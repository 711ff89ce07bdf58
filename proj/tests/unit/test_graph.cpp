#include <gtest/gtest.h>

#include <random>

#include "shellkit/generators.hpp"
#include "shellkit/graph.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace shellkit;
using testing_helpers::G;
using Labels = std::vector<Label>;

TEST(Graph, RejectsLoops) { EXPECT_THROW(G("a-a"), InputError); }

TEST(Graph, RejectsBadLabels) {
  EXPECT_THROW(validate_label("a b"), InputError);
  EXPECT_THROW(validate_label("a·w"), InputError);
  EXPECT_THROW(validate_label(""), InputError);
  EXPECT_NO_THROW(validate_label("x_1"));
}

TEST(Graph, AdjacencyIsSymmetric) {
  const auto g = G("a-b b-c d");
  EXPECT_TRUE(g.adjacent("a", "b"));
  EXPECT_TRUE(g.adjacent("b", "a"));
  EXPECT_FALSE(g.adjacent("a", "c"));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree("d"), 0u);
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(neighbors(G("a-b b-c"), "b"), (Labels{"a", "c"}));
  EXPECT_EQ(neighbors(families::complete_bipartite(1, 3), "x1"), (Labels{"y1", "y2", "y3"}));
  EXPECT_TRUE(neighbors(G("a-b c"), "c").empty());
}

TEST(Neighbors, UnknownVertexNamed) {
  try {
    neighbors(G("a-b"), "zz");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(DeleteClosedNeighborhood, Examples) {
  EXPECT_EQ(delete_closed_neighborhood(G("a-b b-c"), "a"), G("c"));
  EXPECT_EQ(delete_closed_neighborhood(families::cycle(6), "1"), G("3-4 4-5"));
  EXPECT_TRUE(delete_closed_neighborhood(G("a-b"), "a").empty());
  EXPECT_THROW(delete_closed_neighborhood(G("a-b"), "q"), PreconditionError);
}

TEST(DeleteClosedNeighborhood, OriginalUnchanged) {
  const auto g = families::cycle(6);
  const auto copy = g;
  (void)delete_closed_neighborhood(g, "1");
  EXPECT_EQ(g, copy);
}

TEST(Whiskers, Examples) {
  const auto w = add_whiskers(G("a-b"), {"a"});
  EXPECT_EQ(w, G("b-a a-a·w"));
  const auto c4 = add_whiskers(families::cycle(4), {"1", "2", "3", "4"});
  EXPECT_EQ(c4.order(), 8u);
  EXPECT_EQ(degree_one_vertices(c4).size(), 4u);
  EXPECT_EQ(add_whiskers(families::cycle(4), {}), families::cycle(4));
  EXPECT_THROW(add_whiskers(G("a-b"), {"c"}), PreconditionError);
}

TEST(Whiskers, TipLabelsStayFresh) {
  const auto once = add_whiskers(G("a-b"), {"a"});
  const auto twice = add_whiskers(once, {"a"});
  EXPECT_TRUE(twice.has_vertex("a·w·w"));
  EXPECT_EQ(twice.order(), 4u);
}

TEST(Whiskers, DeletingTipsRecoversGminusS) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::random_graph(6, 0.4, rng);
    std::vector<Label> s;
    std::bernoulli_distribution coin(0.5);
    for (const auto& v : g.vertices().labels())
      if (coin(rng)) s.push_back(v);
    auto h = add_whiskers(g, s);
    // Reverse order exercises order independence.
    for (auto it = s.rbegin(); it != s.rend(); ++it) h = delete_closed_neighborhood(h, whisker_tip(g, *it));
    EXPECT_EQ(h, delete_vertices(g, s));
  }
}

TEST(Bipartition, Examples) {
  auto b = bipartition(families::cycle(4));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, (Labels{"1", "3"}));
  EXPECT_EQ(b->second, (Labels{"2", "4"}));
  EXPECT_FALSE(bipartition(families::cycle(5)));
  b = bipartition(families::cycle(6));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, (Labels{"1", "3", "5"}));
  EXPECT_EQ(b->second, (Labels{"2", "4", "6"}));
}

TEST(Bipartition, IsolatedVerticesGoFirst) {
  const auto b = bipartition(G("a-b z"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, (Labels{"a", "z"}));
}

TEST(Bipartition, AgreesWithColouringOracle) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = gen::random_graph(7, 0.3, rng);
    const auto b = bipartition(g);
    EXPECT_EQ(b.has_value(), oracle::is_bipartite(g));
    if (!b) continue;
    const Mask first = g.vertices().mask_of(b->first);
    for (const auto& [x, y] : g.edges()) {
      const bool fx = (first & bit(g.vertices().index_of(x))) != 0;
      const bool fy = (first & bit(g.vertices().index_of(y))) != 0;
      EXPECT_NE(fx, fy);
    }
  }
}

TEST(Simplicial, Examples) {
  EXPECT_EQ(find_simplicial_vertex(G("a-b b-c a-c d-a")), std::optional<Label>("b"));
  EXPECT_EQ(find_simplicial_vertex(G("a-b b-c a-c d-a"), {"b", "c"}), std::optional<Label>("d"));
  EXPECT_FALSE(find_simplicial_vertex(families::cycle(4)));
  EXPECT_EQ(find_simplicial_vertex(families::complete(3)), std::optional<Label>("1"));
}

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(G("a-b b-c b-d d-e")));
  EXPECT_FALSE(is_chordal(families::cycle(4)));
  EXPECT_TRUE(is_chordal(G("1-2 2-3 3-4 4-5 5-6 6-1 1-3 1-4 1-5")));
}

TEST(Chordal, EliminationOrderIsPerfect) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::random_chordal(9, rng);
    const auto order = is_chordal(g);
    ASSERT_TRUE(order);
    ASSERT_EQ(order->size(), g.order());
    for (const auto& v : *order) {
      const auto nb = neighbors(g, v);
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) EXPECT_TRUE(g.adjacent(nb[a], nb[b]));
      g = delete_vertices(g, {v});
    }
  }
}

TEST(Chordal, AgreesWithChordlessCycleOracle) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = 4 + trial % 5;
    const auto g = gen::random_graph(n, 0.45, rng);
    EXPECT_EQ(is_chordal(g).has_value(), !oracle::has_chordless_cycle(g));
  }
}

TEST(DegreeOne, Examples) {
  EXPECT_EQ(degree_one_vertices(G("a-b b-c")), (std::vector<Edge>{{"a", "b"}, {"c", "b"}}));
  EXPECT_TRUE(degree_one_vertices(families::cycle(4)).empty());
  EXPECT_EQ(degree_one_vertices(families::complete_bipartite(1, 3)).size(), 3u);
}

TEST(Components, Examples) {
  const auto parts = connected_components(G("a-b c-d"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], G("a-b"));
  EXPECT_EQ(parts[1], G("c-d"));
  EXPECT_EQ(connected_components(families::cycle(5)).size(), 1u);
  EXPECT_TRUE(connected_components(Graph{}).empty());
}

TEST(Trees, Recognised) {
  EXPECT_TRUE(is_tree(G("a-b b-c b-d")));
  EXPECT_FALSE(is_tree(families::cycle(3)));
  EXPECT_FALSE(is_tree(G("a-b c-d")));
}

TEST(Families, Shapes) {
  EXPECT_EQ(families::cycle(6).edge_count(), 6u);
  EXPECT_EQ(families::path(4).edge_count(), 3u);
  EXPECT_EQ(families::complete(5).edge_count(), 10u);
  EXPECT_EQ(families::complete_bipartite(2, 3).edge_count(), 6u);
  const auto ex = families::acyclic_not_scm_example();
  EXPECT_EQ(ex.order(), 10u);
  EXPECT_EQ(ex.edge_count(), 10u);
}
