#include <gtest/gtest.h>

#include "lefschetz/polynomial.hpp"

using namespace lefschetz;

namespace {

auto var(std::size_t r, std::size_t i, unsigned k = 1) -> Polynomial {
  return Polynomial(Monomial::variable(r, i, k));
}

} // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const auto x = var(2, 0), y = var(2, 1);
  const auto sq = (x + y).pow(2);
  EXPECT_EQ(sq.terms().size(), 3u);
  EXPECT_EQ(sq.terms().at(Monomial(std::vector<unsigned>{1, 1})), 2);
  EXPECT_TRUE(sq.is_homogeneous());
  EXPECT_EQ(sq.degree(), 2u);
  EXPECT_FALSE((x + var(2, 1, 2)).is_homogeneous());
  EXPECT_EQ((x + Polynomial(Monomial::variable(2, 0), -1)).is_zero(), true);
}

TEST(Polynomial, ToStringIsRevlexWithSigns) {
  const std::vector<BigInt> c{-3, 0};
  const auto p = Polynomial::linear_form(c).pow(2) + var(2, 1, 2);
  EXPECT_EQ(p.to_string(), "9*x1^2 + x2^2");
  const std::vector<BigInt> d{1, -1};
  EXPECT_EQ(Polynomial::linear_form(d).to_string(), "x1 - x2");
  EXPECT_EQ(Polynomial(2).to_string(), "0");
}

TEST(Polynomial, SubstituteLast) {
  // (x + y)^2 with y = -2x gives x^2.
  const auto x = var(2, 0), y = var(2, 1);
  const auto value = Polynomial(Monomial::variable(1, 0), -2);
  const auto r = (x + y).pow(2).substitute_last(value);
  EXPECT_EQ(r.num_vars(), 1u);
  EXPECT_EQ(r, Polynomial(Monomial::variable(1, 0, 2)));
}

TEST(Polynomial, ReduceDropsIdealTerms) {
  const auto x = var(2, 0), y = var(2, 1);
  const MonomialIdeal i(2, {Monomial::variable(2, 0, 2)});
  const auto r = (x + y).pow(2).reduce(i);
  EXPECT_EQ(r.terms().size(), 2u);
  EXPECT_EQ(r.as_monomial(), nullptr);
  EXPECT_NE(var(2, 1).as_monomial(), nullptr);
}

TEST(Polynomial, TimesMonomial) {
  const auto x = var(2, 0), y = var(2, 1);
  EXPECT_EQ((x + y).times(Monomial::variable(2, 1)), x * y + y * y);
}
