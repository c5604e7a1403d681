#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/sequences.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

using Seq = std::vector<std::int64_t>;

} // namespace

TEST(Macaulay, KnownBounds) {
  EXPECT_EQ(macaulay_bound(5, 2), 7);
  EXPECT_EQ(macaulay_bound(3, 1), 6);
  EXPECT_EQ(macaulay_bound(1, 5), 1);
  EXPECT_EQ(macaulay_bound(0, 3), 0);
  EXPECT_THROW((void)macaulay_bound(-1, 2), Error);
  EXPECT_THROW((void)macaulay_bound(4, 0), Error);
}

TEST(Macaulay, AgreesWithLexShadow) {
  for (unsigned d = 1; d <= 3; ++d)
    for (std::int64_t h = 0; h <= 30; ++h)
      EXPECT_EQ(macaulay_bound(h, d), oracle::macaulay_bound(h, d)) << h << " in " << d;
}

TEST(Sequences, NonUnimodalVector) {
  const Seq s{1, 13, 12, 13, 1};
  EXPECT_FALSE(is_unimodal(s));
  EXPECT_FALSE(is_SI_sequence(s));
  EXPECT_FALSE(wlp_hilbert_shape(s));
  EXPECT_TRUE(is_O_sequence(s));
}

TEST(Sequences, Fixtures) {
  const Seq bk{1, 3, 6, 6, 3};
  EXPECT_TRUE(is_O_sequence(bk));
  EXPECT_TRUE(is_unimodal(bk));
  EXPECT_TRUE(wlp_hilbert_shape(bk));
  EXPECT_FALSE(is_SI_sequence(bk));
  const Seq ci{1, 3, 5, 5, 3, 1};
  EXPECT_TRUE(is_SI_sequence(ci));
  EXPECT_TRUE(is_strictly_unimodal(ci));
  EXPECT_FALSE(is_strictly_unimodal(Seq{1, 3, 2, 2}));
  EXPECT_TRUE(is_unimodal(Seq{1, 3, 2, 2}));
}

TEST(Sequences, OSequenceBoundaries) {
  EXPECT_TRUE(is_O_sequence(Seq{1, 2, 3, 4}));
  EXPECT_FALSE(is_O_sequence(Seq{1, 2, 4}));
  EXPECT_FALSE(is_O_sequence(Seq{2, 2}));
  EXPECT_FALSE(is_O_sequence(Seq{1, -1}));
  EXPECT_TRUE(is_O_sequence(Seq{1, 3, 6, 10, 0, 0}));
  EXPECT_FALSE(is_O_sequence(Seq{1, 3, 0, 1}));
}

TEST(Sequences, DifferentiableAndDifference) {
  EXPECT_EQ(first_difference(Seq{1, 3, 6, 6, 3}), (Seq{1, 2, 3, 0, -3}));
  EXPECT_TRUE(is_differentiable_O(Seq{1, 3, 5}));
  EXPECT_FALSE(is_differentiable_O(Seq{1, 3, 6, 11}));
  EXPECT_FALSE(wlp_hilbert_shape(Seq{1, 3, 3, 4}));
}

TEST(Sequences, HauselHalf) {
  EXPECT_TRUE(hausel_halfcheck(Seq{1, 3, 6, 6, 3}));
  EXPECT_FALSE(hausel_halfcheck(Seq{1, 3, 3, 4, 4, 1}));
  EXPECT_TRUE(hausel_halfcheck(Seq{}));
}
