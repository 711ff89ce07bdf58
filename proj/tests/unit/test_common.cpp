#include <gtest/gtest.h>

#include "shellkit/common.hpp"

using namespace shellkit;

TEST(Universe, SortsAndDeduplicates) {
  const Universe u({"c", "a", "b", "a"});
  EXPECT_EQ(u.size(), 3u);
  EXPECT_EQ(u[0], "a");
  EXPECT_EQ(u.index_of("c"), 2u);
  EXPECT_FALSE(u.contains("d"));
  EXPECT_THROW(u.index_of("d"), PreconditionError);
}

TEST(Universe, MasksRoundTrip) {
  const Universe u({"a", "b", "c", "d"});
  const std::vector<Label> s{"b", "d"};
  EXPECT_EQ(u.mask_of(s), Mask{0b1010});
  EXPECT_EQ(u.labels_of(0b1010), s);
}

TEST(Universe, TranslateBetweenUniverses) {
  const Universe big({"a", "b", "c", "d"});
  const Universe small({"b", "d"});
  EXPECT_EQ(small.translate(0b11, big), Mask{0b1010});
}

TEST(Universe, LimitIs64) {
  std::vector<Label> many;
  for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW((Universe(many)), LimitExceeded);
  many.pop_back();
  EXPECT_NO_THROW((Universe(many)));
}

TEST(Orders, SizeThenLex) {
  // {a,b} < {c} in lex but {c} first by size.
  EXPECT_TRUE(lex_less(0b011, 0b100));
  EXPECT_TRUE(size_lex_less(0b100, 0b011));
  std::vector<Mask> v{0b011, 0b100, 0b101};
  sort_size_lex(v);
  EXPECT_EQ(v, (std::vector<Mask>{0b100, 0b011, 0b101}));
}

TEST(Orders, MinimalAndMaximal) {
  EXPECT_EQ(minimal_elements({0b011, 0b001, 0b110}), (std::vector<Mask>{0b001, 0b110}));
  auto maximal = maximal_elements({0b011, 0b001, 0b110});
  sort_size_lex(maximal);
  EXPECT_EQ(maximal, (std::vector<Mask>{0b011, 0b110}));
  const std::vector<Mask> chain{0b001, 0b011};
  EXPECT_FALSE(is_antichain(chain));
}
