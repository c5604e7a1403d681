#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/factor.hpp"

using namespace lefschetz;

TEST(Factor, SmallNumbers) {
  const auto f = factor(BigInt(360));
  EXPECT_EQ(f.to_string(), "2^3 * 3^2 * 5");
  EXPECT_TRUE(f.complete());
  EXPECT_EQ(factor(BigInt(1)).to_string(), "1");
  EXPECT_EQ(factor(BigInt(-12)).product(), 12);
}

TEST(Factor, ZeroIsRejected) {
  try {
    (void)factor(BigInt(0));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
  }
}

TEST(Factor, SemiprimeBeyondTrialDivision) {
  const BigInt p("1000000007"), q("998244353");
  const auto f = factor(p * q * 12);
  ASSERT_TRUE(f.complete());
  ASSERT_EQ(f.primes.size(), 4u);
  EXPECT_EQ(f.primes.at(p), 1u);
  EXPECT_EQ(f.primes.at(q), 1u);
}

TEST(Factor, PrimalityOfBigIntegers) {
  EXPECT_TRUE(is_prime(BigInt("170141183460469231731687303715884105727"))); // 2^127 - 1
  EXPECT_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
  EXPECT_FALSE(is_prime(BigInt(1)));
  EXPECT_FALSE(is_prime(BigInt(-7)));
}

TEST(Factor, GivingUpLeavesCofactor) {
  FactorOptions tight;
  tight.trial_division_bound = 100;
  tight.rho_iterations = 1;
  tight.rho_attempts = 1;
  const BigInt p("1000000000000037"), q("1000000000000091");
  const auto f = factor(BigInt(4) * p * q, tight);
  EXPECT_EQ(f.product(), BigInt(4) * p * q);
  if (!f.complete())
    EXPECT_NE(f.to_string().find('['), std::string::npos);
}
