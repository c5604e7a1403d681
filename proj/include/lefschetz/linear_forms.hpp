#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// Ideal generated by homogeneous polynomials, kept as a monomial part J plus
/// the remaining generators. Graded pieces are computed in the standard
/// monomial basis of R/J.
class HomogeneousIdeal {
public:
  /// Zero generators are dropped, single terms join the monomial part.
  /// Throws DimensionMismatch, InvalidArgument (non-homogeneous generator).
  HomogeneousIdeal(std::size_t num_vars, const std::vector<Polynomial> &generators);

  [[nodiscard]] auto num_vars() const noexcept -> std::size_t { return num_vars_; }
  [[nodiscard]] auto monomial_part() const noexcept -> const MonomialIdeal & {
    return monomial_part_;
  }
  [[nodiscard]] auto polynomial_generators() const noexcept
      -> const std::vector<Polynomial> & {
    return polynomials_;
  }

  /// dim [R/I]_d over Q.
  [[nodiscard]] auto hilbert_value(unsigned d) const -> std::int64_t;
  /// Values up to the first zero. Throws NotArtinianInstance when degree
  /// max_degree + 1 is still nonzero.
  [[nodiscard]] auto hilbert_function(unsigned max_degree) const -> HVector;

  /// Image in R/(l) for l = x_r + sum_{k<r} c_k x_k, written in x_1..x_{r-1}.
  /// Throws DimensionMismatch unless c has r-1 entries.
  [[nodiscard]] auto restrict_to(std::span<const BigInt> c) const -> HomogeneousIdeal;

  [[nodiscard]] auto to_string() const -> std::string;

private:
  std::size_t num_vars_;
  MonomialIdeal monomial_part_;
  std::vector<Polynomial> polynomials_;
};

/// Integer in [lo, hi] by rejection sampling, identical on every standard
/// library (unlike std::uniform_int_distribution).
auto uniform_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) -> std::int64_t;
/// uniform_int(rng, -bound, bound).
auto uniform_coefficient(std::mt19937_64 &rng, std::int64_t bound) -> std::int64_t;

/// Generator for trial `index` under a run seed.
auto trial_rng(std::uint64_t seed, std::uint64_t index) -> std::mt19937_64;

/// <L_1^{a_1}, ..., L_n^{a_n}> with L_i = forms[i].
struct LinearFormConfig {
  std::size_t num_vars = 0;
  std::vector<std::vector<BigInt>> forms;
  std::vector<unsigned> exponents;
  std::uint64_t seed = 0;
  std::int64_t coefficient_bound = 1000;

  [[nodiscard]] auto ideal() const -> HomogeneousIdeal;
};

/// The first min(r, n) forms are x_1, x_2, ...; the rest have coefficients
/// drawn from [-bound, bound] by a generator seeded with (r, n, seed, bound).
/// Throws InvalidArgument when r == 0 or bound < 10.
auto sample_config(std::size_t num_vars, std::vector<unsigned> exponents,
                   std::uint64_t seed, std::int64_t bound = 1000) -> LinearFormConfig;

/// Throws NotArtinianInstance unless the forms span R_1.
auto power_ideal_hf(const LinearFormConfig &cfg) -> HVector;

/// Coefficients of prod (1 - t^{a_i}) / (1 - t)^r up to the first
/// non-positive one. When none appears within max_length terms the prefix is
/// returned with terminated == false.
struct FrobergSeries {
  HVector values;
  bool terminated = true;
};
auto froberg_prediction(std::size_t num_vars, std::span<const unsigned> degrees,
                        std::size_t max_length = 64) -> FrobergSeries;

enum class VerdictStatus { Certified, Probable, Inconclusive };
auto to_string(VerdictStatus s) -> std::string_view;

/// Multiplication [R/I]_i -> [R/I]_{i+1} by the best linear form seen.
/// rank = h_{i+1} - dim [R/(I,l)]_{i+1}.
struct DegreeEvidence {
  unsigned source_degree = 0;
  std::int64_t source_dim = 0;
  std::int64_t target_dim = 0;
  std::int64_t best_rank = 0;
  /// Smallest dim [R/(I,l)]_{i+1} over the trials.
  std::int64_t restricted_dim = 0;
  /// Value of dim [R/(I,l)]_{i+1} when the map has maximal rank.
  std::int64_t expected_restricted_dim = 0;
  bool certified = false;
};

/// A maximal-rank witness certifies its degree for the general linear form;
/// deficiency in every trial only makes failure probable.
struct ProbabilisticVerdict {
  bool wlp_holds = true;
  unsigned trials = 0;
  /// Trials whose form had maximal rank in every degree it was tested in.
  unsigned successes = 0;
  VerdictStatus status = VerdictStatus::Inconclusive;
  HVector hilbert;
  std::vector<DegreeEvidence> evidence;
};

/// Samples l with per-trial generators derived from (seed, trial); stops as
/// soon as every degree is certified. Throws NotArtinianInstance.
auto wlp_trials(const HomogeneousIdeal &ideal, unsigned max_degree, unsigned trials,
                std::uint64_t seed, std::int64_t bound = 1000) -> ProbabilisticVerdict;

/// Throws NotArtinianInstance.
auto wlp_powers(const LinearFormConfig &cfg, unsigned trials = 5) -> ProbabilisticVerdict;

/// Forms of the given degrees with every coefficient drawn from [-bound, bound].
struct GeneralFormsConfig {
  std::size_t num_vars = 0;
  std::vector<unsigned> degrees;
  std::uint64_t seed = 0;
  std::int64_t coefficient_bound = 1000;
  std::vector<Polynomial> forms;

  [[nodiscard]] auto ideal() const -> HomogeneousIdeal;
};

/// Throws InvalidArgument when r == 0, bound < 10 or a degree is 0.
auto sample_general_forms(std::size_t num_vars, std::vector<unsigned> degrees,
                          std::uint64_t seed, std::int64_t bound = 1000)
    -> GeneralFormsConfig;

/// WLP of a complete intersection of general forms (one form per variable).
/// Throws InvalidArgument unless there are r forms, NotArtinianInstance when
/// the sample is not a regular sequence.
auto wlp_general_ci(const GeneralFormsConfig &cfg, unsigned trials = 5)
    -> ProbabilisticVerdict;

/// Degree-j forms vanishing to order j - a_i + 1 at the point with coordinate
/// vector forms[i], for every i. Throws DegreeTooSmall when j < max a_i.
auto ei_fatpoint_dim(const LinearFormConfig &cfg, unsigned j) -> std::int64_t;

enum class Prediction { Holds, Fails, Open, ConjecturedFails };
auto to_string(Prediction p) -> std::string_view;

/// Five general powers a_1 <= ... <= a_5 in four variables.
/// Throws Unsorted, InvalidArgument (not five exponents, or one below 2).
auto predict_4vars(std::span<const unsigned> exponents) -> Prediction;
auto lambda_4vars(std::span<const unsigned> exponents) -> std::int64_t;

/// <L_1^d, ..., L_5^d, L_6^{d+e}> in five variables. Throws InvalidArgument
/// when d == 0.
auto predict_5vars(unsigned d, unsigned e) -> Prediction;

/// n_forms uniform t-th powers: 2k variables with 2k+1 forms (k >= 2), or 7
/// variables with 8 forms. In four variables t = 2 holds (a_1 = 2 in the
/// four-variable theorem); in 2k >= 6 variables failure is exactly t > 1.
/// Throws UnsupportedShape, InvalidArgument (t == 0).
auto predict_uniform(std::size_t num_vars, std::size_t n_forms, unsigned t)
    -> Prediction;

} // namespace lefschetz
