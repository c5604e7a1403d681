#include "lefschetz/lefschetz.hpp"

#include <numeric>
#include <random>
#include <set>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

auto factorial(unsigned n) -> BigInt {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Coefficient of the monomial with these exponents in (x1 + ... + xr)^d.
auto multinomial(const Monomial &quotient) -> BigInt {
  BigInt c = factorial(quotient.degree());
  for (unsigned e : quotient.exponents())
    if (e > 1)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(e).get_mpz_t());
  return c;
}

void require_characteristic(std::uint64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw Error(ErrorCode::NonPrimeModulus,
                "characteristic " + std::to_string(characteristic) +
                    " is neither 0 nor prime");
}

auto check_propagation(const std::vector<MapRank> &ranks, bool level) -> bool {
  bool seen_surjective = false;
  for (const auto &r : ranks) {
    if (seen_surjective && !r.surjective())
      return false;
    seen_surjective = seen_surjective || r.surjective();
  }
  if (level) {
    bool seen_injective = false;
    for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
      if (seen_injective && !it->injective())
        return false;
      seen_injective = seen_injective || it->injective();
    }
  }
  return true;
}

} // namespace

auto to_string(Property p) -> std::string_view {
  return p == Property::WLP ? "WLP" : "SLP";
}

auto to_string(FailureKind k) -> std::string_view {
  switch (k) {
  case FailureKind::Injectivity: return "injectivity";
  case FailureKind::Surjectivity: return "surjectivity";
  case FailureKind::Bijectivity: return "bijectivity";
  }
  return "unknown";
}

auto classify(std::size_t rank, std::size_t source_dim, std::size_t target_dim)
    -> std::optional<FailureKind> {
  if (rank == std::min(source_dim, target_dim))
    return std::nullopt;
  if (source_dim < target_dim)
    return FailureKind::Injectivity;
  if (source_dim > target_dim)
    return FailureKind::Surjectivity;
  return FailureKind::Bijectivity;
}

auto mult_matrix(const MonomialIdeal &ideal, unsigned source_degree, unsigned power)
    -> GradedMap {
  if (!ideal.is_artinian())
    throw Error(ErrorCode::NotArtinian, ideal.to_string() + " is not artinian");
  const auto &source = ideal.piece(source_degree);
  const auto &target = ideal.piece(source_degree + power);
  IntegerMatrix m(target.basis.size(), source.basis.size());
  for (std::size_t row = 0; row < target.basis.size(); ++row) {
    const Monomial &t = target.basis[row];
    for (std::size_t col = 0; col < source.basis.size(); ++col) {
      const Monomial &s = source.basis[col];
      if (s.divides(t))
        m(row, col) = power == 1 ? BigInt(1) : multinomial(s.cofactor_in(t));
    }
  }
  return {source_degree, power, std::move(m)};
}

auto map_rank(const GradedMap &map, std::uint64_t characteristic) -> MapRank {
  MapRank r;
  r.source_degree = map.source_degree;
  r.power = map.power;
  r.source_dim = map.matrix.cols();
  r.target_dim = map.matrix.rows();
  r.rank = characteristic == 0 ? rank_exact(map.matrix)
                               : rank_mod_p(map.matrix, characteristic);
  return r;
}

auto decide_wlp(const MonomialIdeal &ideal, std::uint64_t characteristic)
    -> LefschetzReport {
  require_characteristic(characteristic);
  const HVector h = ideal.hilbert_function();
  LefschetzReport report;
  report.property = Property::WLP;
  report.characteristic = characteristic;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const auto rank = map_rank(mult_matrix(ideal, static_cast<unsigned>(i), 1),
                               characteristic);
    if (auto kind = classify(rank.rank, rank.source_dim, rank.target_dim))
      report.failures.push_back({rank.source_degree, 1, *kind});
    report.ranks.push_back(rank);
  }
  report.holds = report.failures.empty();
  report.propagation_consistent =
      check_propagation(report.ranks, ideal.socle_profile().is_level);
  return report;
}

auto decide_slp(const MonomialIdeal &ideal, std::uint64_t characteristic)
    -> LefschetzReport {
  require_characteristic(characteristic);
  const HVector h = ideal.hilbert_function();
  LefschetzReport report;
  report.property = Property::SLP;
  report.characteristic = characteristic;
  const std::size_t n = h.size();
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const auto rank = map_rank(
          mult_matrix(ideal, static_cast<unsigned>(i), static_cast<unsigned>(d)),
          characteristic);
      if (auto kind = classify(rank.rank, rank.source_dim, rank.target_dim))
        report.failures.push_back({rank.source_degree, rank.power, *kind});
      report.ranks.push_back(rank);
    }
  }
  report.holds = report.failures.empty();
  std::vector<MapRank> linear;
  for (const auto &r : report.ranks)
    if (r.power == 1)
      linear.push_back(r);
  report.propagation_consistent =
      check_propagation(linear, ideal.socle_profile().is_level);
  return report;
}

auto bad_primes(const MonomialIdeal &ideal, const BadPrimeOptions &options)
    -> BadPrimeCertificate {
  const HVector h = ideal.hilbert_function();
  std::vector<GradedMap> maps;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    maps.push_back(mult_matrix(ideal, static_cast<unsigned>(i), 1));

  BadPrimeCertificate cert;
  std::set<BigInt> candidates;
  BigInt cofactor = 1;
  std::vector<BigInt> degree_minor;
  for (const auto &map : maps) {
    const IntegerMatrix &m = map.matrix;
    std::vector<std::size_t> rows(m.rows());
    std::vector<std::size_t> cols(m.cols());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    BigInt g;
    try {
      g = abs(nonzero_maximal_minor(m, rows, cols).value);
      std::mt19937_64 rng(map.source_degree);
      for (unsigned k = 1; k < options.minors_per_degree && g != 1; ++k) {
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        const BigInt other = nonzero_maximal_minor(m, rows, cols).value;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), other.get_mpz_t());
      }
    } catch (const Error &e) {
      if (e.code() != ErrorCode::NotMaximalRank)
        throw;
      throw Error(ErrorCode::WlpFailsInCharZero,
                  ideal.to_string() + " fails the WLP in characteristic 0 "
                                      "(degree " +
                      std::to_string(map.source_degree) +
                      "), hence in every positive characteristic");
    }
    Factorization f = factor(g, options.factor);
    for (const auto &[p, mult] : f.primes)
      candidates.insert(p);
    if (f.unfactored_cofactor)
      cofactor *= *f.unfactored_cofactor;
    degree_minor.push_back(g);
    cert.candidate_source.push_back({map.source_degree, g, std::move(f)});
  }

  for (const BigInt &p : candidates) {
    std::vector<PrimeEvidence> drops;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      // A prime can only lower the rank where it divides the minor.
      if (!mpz_divisible_p(degree_minor[k].get_mpz_t(), p.get_mpz_t()))
        continue;
      const IntegerMatrix &m = maps[k].matrix;
      const std::size_t expected = std::min(m.rows(), m.cols());
      const std::size_t rank = rank_mod_prime(m, p);
      if (rank < expected)
        drops.push_back({maps[k].source_degree, rank, expected});
    }
    if (!drops.empty()) {
      cert.primes.push_back(p);
      cert.evidence.emplace(p, std::move(drops));
    }
  }
  for (const BigInt &p : cert.primes)
    while (cofactor != 0 && mpz_divisible_p(cofactor.get_mpz_t(), p.get_mpz_t()))
      mpz_divexact(cofactor.get_mpz_t(), cofactor.get_mpz_t(), p.get_mpz_t());
  if (cofactor != 1)
    cert.unresolved_cofactor = cofactor;
  return cert;
}

auto hausel_check(const MonomialIdeal &ideal) -> HauselResult {
  const SocleProfile profile = ideal.socle_profile();
  if (!profile.is_level)
    throw Error(ErrorCode::NotLevel, ideal.to_string() + " is not level");
  const auto e = static_cast<std::ptrdiff_t>(profile.socle_degrees.front());
  HauselResult result;
  for (std::ptrdiff_t j = 0; 2 * j <= e - 1; ++j) {
    const auto r = map_rank(mult_matrix(ideal, static_cast<unsigned>(j), 1), 0);
    result.checked_degrees.push_back(static_cast<unsigned>(j));
    if (!r.injective())
      result.failing_degrees.push_back(static_cast<unsigned>(j));
  }
  result.holds = result.failing_degrees.empty();
  return result;
}

} // namespace lefschetz
