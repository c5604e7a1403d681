#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/factor.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// Multiplication by (x1 + ... + xr)^power from [R/I]_i to [R/I]_{i+power}.
/// Rows follow standard_basis(I, i + power), columns standard_basis(I, i).
struct GradedMap {
  unsigned source_degree = 0;
  unsigned power = 1;
  IntegerMatrix matrix;
};

enum class Property { WLP, SLP };
enum class FailureKind { Injectivity, Surjectivity, Bijectivity };

auto to_string(Property p) -> std::string_view;
auto to_string(FailureKind k) -> std::string_view;

struct MapRank {
  unsigned source_degree = 0;
  unsigned power = 1;
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  [[nodiscard]] auto maximal() const -> bool {
    return rank == std::min(source_dim, target_dim);
  }
  [[nodiscard]] auto injective() const -> bool { return rank == source_dim; }
  [[nodiscard]] auto surjective() const -> bool { return rank == target_dim; }
};

struct Failure {
  unsigned source_degree = 0;
  unsigned power = 1;
  FailureKind kind = FailureKind::Injectivity;
};

struct LefschetzReport {
  Property property = Property::WLP;
  std::uint64_t characteristic = 0;
  bool holds = true;
  std::vector<Failure> failures;
  std::vector<MapRank> ranks;
  /// Surjectivity persists upward and, for level algebras, injectivity
  /// persists downward. A false value indicates an engine defect.
  bool propagation_consistent = true;
};

/// Failure kind for a non-maximal map, or nullopt when the rank is maximal.
auto classify(std::size_t rank, std::size_t source_dim, std::size_t target_dim)
    -> std::optional<FailureKind>;

/// Throws NotArtinian.
auto mult_matrix(const MonomialIdeal &ideal, unsigned source_degree, unsigned power)
    -> GradedMap;

/// Rank over Q when characteristic is 0, over F_p otherwise.
auto map_rank(const GradedMap &map, std::uint64_t characteristic) -> MapRank;

/// Throws NotArtinian, NonPrimeModulus.
auto decide_wlp(const MonomialIdeal &ideal, std::uint64_t characteristic = 0)
    -> LefschetzReport;
auto decide_slp(const MonomialIdeal &ideal, std::uint64_t characteristic = 0)
    -> LefschetzReport;

struct PrimeEvidence {
  unsigned source_degree = 0;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
};

struct MinorSource {
  unsigned source_degree = 0;
  /// gcd of the maximal minors sampled in this degree (a single minor by default).
  BigInt minor;
  Factorization factorization;
};

struct BadPrimeCertificate {
  /// Verified primes, increasing.
  std::vector<BigInt> primes;
  std::map<BigInt, std::vector<PrimeEvidence>> evidence;
  std::vector<MinorSource> candidate_source;
  /// Product of unsplit composite parts, coprime to every listed prime.
  std::optional<BigInt> unresolved_cofactor;
};

struct BadPrimeOptions {
  /// Number of maximal minors whose gcd bounds the candidates per degree.
  unsigned minors_per_degree = 1;
  FactorOptions factor;
};

/// Characteristics in which an algebra with the WLP in characteristic 0 loses
/// it. Throws WlpFailsInCharZero, NotArtinian.
auto bad_primes(const MonomialIdeal &ideal, const BadPrimeOptions &options = {})
    -> BadPrimeCertificate;

struct HauselResult {
  bool holds = true;
  std::vector<unsigned> checked_degrees;
  std::vector<unsigned> failing_degrees;
};

/// Injectivity of the degree-j multiplication for j <= floor((e-1)/2) on a
/// level monomial algebra in characteristic 0. Throws NotLevel, NotArtinian.
auto hausel_check(const MonomialIdeal &ideal) -> HauselResult;

} // namespace lefschetz
