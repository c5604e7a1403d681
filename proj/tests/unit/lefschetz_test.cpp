#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/lefschetz.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

auto mono(std::vector<unsigned> e) -> Monomial { return Monomial(std::move(e)); }

auto ci(std::vector<unsigned> e) -> MonomialIdeal { return complete_intersection(e); }

auto bk() -> MonomialIdeal {
  return MonomialIdeal(3, {mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}),
                           mono({1, 1, 1})});
}

} // namespace

TEST(Classify, Kinds) {
  EXPECT_FALSE(classify(2, 2, 3));
  EXPECT_EQ(classify(1, 2, 3), FailureKind::Injectivity);
  EXPECT_EQ(classify(2, 3, 2), std::nullopt);
  EXPECT_EQ(classify(1, 3, 2), FailureKind::Surjectivity);
  EXPECT_EQ(classify(2, 3, 3), FailureKind::Bijectivity);
}

TEST(MultMatrix, ShapeAndEntries) {
  const auto i = bk();
  const auto map = mult_matrix(i, 1, 1);
  EXPECT_EQ(map.matrix.rows(), 6u);
  EXPECT_EQ(map.matrix.cols(), 3u);
  // Each variable times x+y+z hits three degree-2 monomials.
  for (std::size_t c = 0; c < 3; ++c) {
    BigInt sum = 0;
    for (std::size_t r = 0; r < 6; ++r)
      sum += map.matrix(r, c);
    EXPECT_EQ(sum, 3);
  }
}

TEST(MultMatrix, PowerCoefficientsAreMultinomial) {
  const auto i = ci({3, 3});
  const auto map = mult_matrix(i, 0, 2);
  // (x+y)^2 = x^2 + 2xy + y^2.
  ASSERT_EQ(map.matrix.rows(), 3u);
  BigInt sum = 0;
  for (std::size_t r = 0; r < 3; ++r)
    sum += map.matrix(r, 0);
  EXPECT_EQ(sum, 4);
}

TEST(MapRank, AgreesWithOracle) {
  const auto i = bk();
  for (unsigned d = 0; d < 4; ++d)
    for (std::uint64_t p : {0, 2, 3, 5}) {
      const auto r = map_rank(mult_matrix(i, d, 1), p);
      EXPECT_EQ(r.rank, oracle::lefschetz_rank(3, i.generators(), d, 1, p))
          << "degree " << d << " char " << p;
    }
}

TEST(DecideWlp, FixtureFailsInDegreeTwo) {
  const auto report = decide_wlp(bk());
  EXPECT_FALSE(report.holds);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].source_degree, 2u);
  EXPECT_EQ(report.failures[0].kind, FailureKind::Bijectivity);
  EXPECT_TRUE(report.propagation_consistent);
}

TEST(DecideWlp, CharacteristicPowers) {
  for (unsigned p : {2u, 3u, 5u}) {
    EXPECT_FALSE(decide_wlp(ci({p, p, p}), p).holds) << p;
    EXPECT_TRUE(decide_wlp(ci({p, p}), p).holds) << p;
  }
  EXPECT_FALSE(decide_slp(ci({4, 4}), 2).holds);
  EXPECT_TRUE(decide_slp(ci({4, 4}), 3).holds);
}

TEST(DecideWlp, RejectsBadCharacteristic) {
  try {
    (void)decide_wlp(ci({2, 2}), 6);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeModulus);
  }
}

TEST(DecideWlp, RejectsNonArtinian) {
  try {
    (void)decide_wlp(MonomialIdeal(2, {mono({2, 0})}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotArtinian);
  }
}

TEST(DecideSlp, CompleteIntersectionsInCharZero) {
  EXPECT_TRUE(decide_slp(ci({2, 3, 4})).holds);
  EXPECT_TRUE(decide_slp(ci({3, 3, 3, 2})).holds);
  EXPECT_FALSE(decide_slp(bk()).holds);
}

TEST(BadPrimes, ThreeCubes) {
  // <x^3,y^3,z^3> has the WLP over Q and loses it only in characteristic 3.
  const auto cert = bad_primes(ci({3, 3, 3}));
  ASSERT_EQ(cert.primes.size(), 1u);
  EXPECT_EQ(cert.primes[0], 3);
  EXPECT_FALSE(cert.unresolved_cofactor);
}

TEST(BadPrimes, RejectsCharZeroFailure) {
  try {
    (void)bad_primes(bk());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::WlpFailsInCharZero);
  }
}

TEST(BadPrimes, DeterminantExample) {
  const MonomialIdeal i(3, {mono({14, 0, 0}), mono({0, 21, 0}), mono({0, 0, 25}),
                            mono({2, 9, 13})});
  const auto cert = bad_primes(i);
  std::vector<std::string> got;
  for (const auto &p : cert.primes)
    got.push_back(p.get_str());
  EXPECT_EQ(got, (std::vector<std::string>{"2", "3", "5", "11", "13", "19", "23", "29",
                                           "5011"}));
  for (std::uint64_t good : {7, 17, 31})
    EXPECT_TRUE(decide_wlp(i, good).holds) << good;
}

TEST(Hausel, LevelAlgebra) {
  const auto r = hausel_check(bk());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checked_degrees, (std::vector<unsigned>{0, 1}));
}

TEST(Hausel, RejectsNonLevel) {
  const MonomialIdeal i(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});
  try {
    (void)hausel_check(i);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLevel);
  }
}
