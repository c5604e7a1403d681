#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lefschetz/exact_linalg.hpp"

namespace lefschetz {

struct FactorOptions {
  std::uint64_t trial_division_bound = 1'000'000;
  /// Brent iterations per Pollard-rho attempt before a cofactor is given up on.
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
  unsigned rho_attempts = 8;
};

struct Factorization {
  std::map<BigInt, unsigned> primes;
  /// Composite part that could not be split within the configured bounds.
  std::optional<BigInt> unfactored_cofactor;

  [[nodiscard]] auto complete() const -> bool { return !unfactored_cofactor; }
  /// Product of all prime powers times the cofactor; equals |n|.
  [[nodiscard]] auto product() const -> BigInt;
  /// "2 * 3^2 * 5" style rendering; an unfactored cofactor appears in brackets.
  [[nodiscard]] auto to_string() const -> std::string;
};

/// Miller-Rabin with the first twelve prime bases, which is a proof of
/// primality below 3.3e24; larger inputs must also pass GMP's BPSW test.
auto is_prime(const BigInt &n) -> bool;

/// Factors |n|. Throws ZeroInput for n == 0.
auto factor(const BigInt &n, const FactorOptions &options = {}) -> Factorization;

} // namespace lefschetz
