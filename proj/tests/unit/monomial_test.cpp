#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/monomial.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

auto mono(std::vector<unsigned> e) -> Monomial { return Monomial(std::move(e)); }

auto bk() -> MonomialIdeal {
  return MonomialIdeal(3, {mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}),
                           mono({1, 1, 1})});
}

} // namespace

TEST(Monomial, Basics) {
  const auto m = mono({2, 0, 1});
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_TRUE(mono({1, 0, 1}).divides(m));
  EXPECT_FALSE(mono({0, 1, 0}).divides(m));
  EXPECT_EQ(mono({1, 0, 0}).cofactor_in(m), mono({1, 0, 1}));
  EXPECT_EQ(m.times_variable(1), mono({2, 1, 1}));
  EXPECT_EQ(mono({0, 4, 0}).pure_power_variable(), 1u);
  EXPECT_FALSE(m.pure_power_variable());
  EXPECT_EQ(m.to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial::one(2).to_string(), "1");
}

TEST(Monomial, RevlexOrder) {
  const auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_EQ(ms.front(), mono({2, 0, 0}));
  EXPECT_EQ(ms.back(), mono({0, 0, 2}));
  // x2^2 precedes x1*x3 in revlex.
  EXPECT_TRUE(revlex_greater(mono({0, 2, 0}), mono({1, 0, 1})));
}

TEST(Monomial, CappedEnumeration) {
  const std::vector<unsigned> caps{1, 1};
  EXPECT_EQ(monomials_of_degree(2, 2, caps).size(), 1u);
}

TEST(MonomialIdeal, MinimalizesGenerators) {
  const MonomialIdeal i(2, {mono({2, 0}), mono({3, 1}), mono({0, 2}), mono({2, 0})});
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(i.contains(mono({5, 5})));
  EXPECT_FALSE(i.contains(mono({1, 1})));
}

TEST(MonomialIdeal, RejectsMixedRings) {
  try {
    MonomialIdeal(2, {mono({1, 0, 0})});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(MonomialIdeal, FixtureHilbertFunction) {
  const auto i = bk();
  EXPECT_TRUE(i.is_artinian());
  EXPECT_EQ(i.hilbert_function().values, (std::vector<std::int64_t>{1, 3, 6, 6, 3}));
  EXPECT_EQ(i.hilbert_function().to_string(), "(1,3,6,6,3)");
  EXPECT_EQ(i.hilbert_function().total(), 19);
}

TEST(MonomialIdeal, FixtureSocle) {
  const auto s = bk().socle_profile();
  EXPECT_EQ(s.cm_type, 3u);
  EXPECT_TRUE(s.is_level);
  EXPECT_EQ(s.socle_degrees, (std::vector<unsigned>{4, 4, 4}));
}

TEST(MonomialIdeal, NonLevelSocle) {
  // <x^2, xy, y^3>: socle x (degree 1) and y^2 (degree 2).
  const MonomialIdeal i(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});
  const auto s = i.socle_profile();
  EXPECT_EQ(s.cm_type, 2u);
  EXPECT_FALSE(s.is_level);
  EXPECT_EQ(s.socle_degrees, (std::vector<unsigned>{1, 2}));
}

TEST(MonomialIdeal, NotArtinian) {
  const MonomialIdeal i(2, {mono({2, 0})});
  EXPECT_FALSE(i.is_artinian());
  try {
    (void)i.hilbert_function();
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotArtinian);
  }
}

TEST(MonomialIdeal, StandardBasisMatchesOracle) {
  const auto i = bk();
  for (unsigned d = 0; d <= 5; ++d) {
    std::size_t expected = 0;
    for (const auto &m : oracle::all_monomials(3, d))
      expected += oracle::member(i.generators(), m) ? 0 : 1;
    EXPECT_EQ(i.standard_basis(d).size(), expected) << "degree " << d;
  }
}

TEST(MonomialIdeal, CompleteIntersection) {
  const std::vector<unsigned> e{2, 3};
  const auto i = complete_intersection(e);
  EXPECT_EQ(i.hilbert_function().values, (std::vector<std::int64_t>{1, 2, 2, 1}));
  EXPECT_EQ(i.pure_power(1), 3u);
}

TEST(MonomialIdeal, InverseSystem) {
  const std::vector<Monomial> socle{mono({2, 1, 0}), mono({0, 1, 2})};
  const auto i = inverse_system_ideal(socle);
  const auto s = i.socle_profile();
  EXPECT_TRUE(s.is_level);
  EXPECT_EQ(s.cm_type, 2u);
  EXPECT_EQ(s.socle_monomials.size(), 2u);
  EXPECT_EQ(i.hilbert_function().values, (std::vector<std::int64_t>{1, 3, 4, 2}));
  try {
    (void)inverse_system_ideal(std::span<const Monomial>{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}
