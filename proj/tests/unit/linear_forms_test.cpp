#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/linear_forms.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

auto code_of(const std::function<void()> &f) -> std::optional<ErrorCode> {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

auto hv(std::vector<std::int64_t> v) -> std::vector<std::int64_t> { return v; }

} // namespace

TEST(Sampling, UniformIntStaysInRangeAndIsDeterministic) {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 2000; ++i) {
    const auto v = uniform_int(a, -3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
    EXPECT_EQ(v, uniform_int(b, -3, 4));
  }
  std::mt19937_64 c(2);
  EXPECT_EQ(uniform_int(c, 5, 5), 5);
}

TEST(Sampling, UniformIntHitsEveryValue) {
  std::mt19937_64 rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 500; ++i)
    seen.insert(uniform_coefficient(rng, 2));
  EXPECT_EQ(seen.size(), 5u);
}

TEST(Sampling, ConfigUsesCoordinatesFirst) {
  const auto cfg = sample_config(3, {2, 2, 2, 2}, 9);
  ASSERT_EQ(cfg.forms.size(), 4u);
  EXPECT_EQ(cfg.forms[0], (std::vector<BigInt>{1, 0, 0}));
  EXPECT_EQ(cfg.forms[2], (std::vector<BigInt>{0, 0, 1}));
  for (const auto &c : cfg.forms[3])
    EXPECT_LE(abs(c), 1000);
  const auto again = sample_config(3, {2, 2, 2, 2}, 9);
  EXPECT_EQ(cfg.forms, again.forms);
  EXPECT_NE(sample_config(3, {2, 2, 2, 2}, 10).forms[3], cfg.forms[3]);
  EXPECT_EQ(code_of([] { (void)sample_config(3, {2}, 0, 5); }), ErrorCode::InvalidArgument);
}

TEST(HomogeneousIdeal, MatchesOracle) {
  const auto cfg = sample_config(3, {2, 2, 3, 2}, 4, 20);
  const auto ideal = cfg.ideal();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < cfg.forms.size(); ++i)
    gens.push_back(Polynomial::linear_form(cfg.forms[i]).pow(cfg.exponents[i]));
  for (unsigned d = 0; d <= 5; ++d)
    EXPECT_EQ(ideal.hilbert_value(d), oracle::polynomial_hilbert_value(3, gens, d)) << d;
}

TEST(HomogeneousIdeal, NotArtinian) {
  const auto cfg = sample_config(3, {2, 2}, 0);
  EXPECT_EQ(code_of([&] { (void)cfg.ideal().hilbert_function(6); }),
            ErrorCode::NotArtinianInstance);
  EXPECT_EQ(code_of([&] { (void)power_ideal_hf(cfg); }), ErrorCode::NotArtinianInstance);
}

TEST(HomogeneousIdeal, RestrictionDimension) {
  const auto ideal = sample_config(3, {2, 2, 2}, 0).ideal();
  const std::vector<BigInt> c{1, 1};
  const auto restricted = ideal.restrict_to(c);
  EXPECT_EQ(restricted.num_vars(), 2u);
  // R/(x^2,y^2,z^2,x+y+z) has Hilbert function (1,2).
  EXPECT_EQ(restricted.hilbert_value(1), 2);
  EXPECT_EQ(restricted.hilbert_value(2), 0);
  EXPECT_EQ(code_of([&] { (void)ideal.restrict_to(std::span<const BigInt>{}); }),
            ErrorCode::DimensionMismatch);
}

TEST(PowerIdeal, CubesOfFiveFormsInFourVariables) {
  const auto cfg = sample_config(4, {3, 3, 3, 3, 3}, 0);
  EXPECT_EQ(power_ideal_hf(cfg).values, hv({1, 4, 10, 15, 15, 6}));
}

TEST(PowerIdeal, CubesFailTheWlp) {
  const auto v = wlp_powers(sample_config(4, {3, 3, 3, 3, 3}, 0));
  EXPECT_FALSE(v.wlp_holds);
  EXPECT_EQ(v.status, VerdictStatus::Probable);
  EXPECT_EQ(v.trials, 5u);
  bool deficient = false;
  for (const auto &e : v.evidence)
    if (e.source_degree == 3) {
      EXPECT_EQ(e.restricted_dim, 1);
      EXPECT_EQ(e.expected_restricted_dim, 0);
      deficient = true;
    }
  EXPECT_TRUE(deficient);
}

TEST(PowerIdeal, ThreeVariablesCertified) {
  const auto v = wlp_powers(sample_config(3, {2, 3, 3, 4}, 1));
  EXPECT_TRUE(v.wlp_holds);
  EXPECT_EQ(v.status, VerdictStatus::Certified);
  EXPECT_EQ(wlp_powers(sample_config(3, {2, 3, 3, 4}, 1), 0).status,
            VerdictStatus::Inconclusive);
}

TEST(Froberg, FiveCubicsInThreeVariables) {
  const std::vector<unsigned> d(5, 3);
  const auto s = froberg_prediction(3, d);
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.values.values, hv({1, 3, 6, 5}));
  EXPECT_EQ(s.values.values, oracle::series(3, {3, 3, 3, 3, 3}, 4));
}

TEST(Froberg, NonTerminatingSeries) {
  const std::vector<unsigned> d{2};
  const auto s = froberg_prediction(3, d, 10);
  EXPECT_FALSE(s.terminated);
  EXPECT_EQ(s.values.size(), 10u);
}

TEST(GeneralForms, CompleteIntersectionCertified) {
  const auto cfg = sample_general_forms(3, {2, 3, 3}, 5, 50);
  EXPECT_EQ(cfg.forms.size(), 3u);
  const auto v = wlp_general_ci(cfg);
  EXPECT_EQ(v.status, VerdictStatus::Certified);
  EXPECT_EQ(v.hilbert.values, hv({1, 3, 5, 5, 3, 1}));
  EXPECT_EQ(code_of([] { (void)wlp_general_ci(sample_general_forms(3, {2, 2}, 0)); }),
            ErrorCode::InvalidArgument);
}

TEST(FatPoints, MatchPowerIdeal) {
  const auto cfg = sample_config(3, {2, 3, 2, 3, 2}, 2);
  const auto h = power_ideal_hf(cfg);
  for (unsigned j = 3; j < h.size() + 2; ++j)
    EXPECT_EQ(ei_fatpoint_dim(cfg, j), h[j]) << j;
  EXPECT_EQ(code_of([&] { (void)ei_fatpoint_dim(cfg, 2); }), ErrorCode::DegreeTooSmall);
}

TEST(Predictors, FourVariables) {
  const std::vector<unsigned> cubes(5, 3);
  EXPECT_EQ(predict_4vars(cubes), Prediction::Fails);
  const std::vector<unsigned> tall{3, 3, 3, 3, 10};
  EXPECT_EQ(predict_4vars(tall), Prediction::Holds);
  const std::vector<unsigned> two{2, 7, 7, 7, 7};
  EXPECT_EQ(predict_4vars(two), Prediction::Holds);
  EXPECT_EQ(lambda_4vars(cubes), 4);
  const std::vector<unsigned> unsorted{3, 2, 3, 3, 3};
  EXPECT_EQ(code_of([&] { (void)predict_4vars(unsorted); }), ErrorCode::Unsorted);
}

TEST(Predictors, FiveVariables) {
  EXPECT_EQ(predict_5vars(2, 0), Prediction::Holds);
  EXPECT_EQ(predict_5vars(3, 0), Prediction::Holds);
  EXPECT_EQ(predict_5vars(4, 0), Prediction::Fails);
  EXPECT_EQ(predict_5vars(3, 1), Prediction::Fails);
  EXPECT_EQ(predict_5vars(3, 2), Prediction::Holds);
  EXPECT_EQ(predict_5vars(4, 2), Prediction::Holds);
  EXPECT_EQ(predict_5vars(4, 1), Prediction::Fails);
  EXPECT_EQ(code_of([] { (void)predict_5vars(0, 1); }), ErrorCode::InvalidArgument);
}

TEST(Predictors, Uniform) {
  EXPECT_EQ(predict_uniform(4, 5, 1), Prediction::Holds);
  EXPECT_EQ(predict_uniform(4, 5, 2), Prediction::Holds);
  EXPECT_EQ(predict_uniform(4, 5, 3), Prediction::Fails);
  EXPECT_EQ(predict_uniform(6, 7, 2), Prediction::Fails);
  EXPECT_EQ(predict_uniform(7, 8, 2), Prediction::Holds);
  EXPECT_EQ(predict_uniform(7, 8, 3), Prediction::ConjecturedFails);
  EXPECT_EQ(predict_uniform(7, 8, 4), Prediction::Fails);
  EXPECT_EQ(code_of([] { (void)predict_uniform(5, 6, 2); }), ErrorCode::UnsupportedShape);
  EXPECT_EQ(code_of([] { (void)predict_uniform(4, 5, 0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(to_string(Prediction::ConjecturedFails), "conjectured-fails");
}
