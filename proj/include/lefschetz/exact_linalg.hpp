#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lefschetz {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static auto identity(std::size_t n) -> IntegerMatrix;
  static auto from_rows(std::initializer_list<std::initializer_list<long>> rows)
      -> IntegerMatrix;

  [[nodiscard]] auto rows() const noexcept -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const noexcept -> std::size_t { return cols_; }
  [[nodiscard]] auto is_square() const noexcept -> bool { return rows_ == cols_; }
  [[nodiscard]] auto entries() const noexcept -> std::span<const BigInt> {
    return entries_;
  }

  auto operator()(std::size_t r, std::size_t c) -> BigInt & {
    return entries_[r * cols_ + c];
  }
  auto operator()(std::size_t r, std::size_t c) const -> const BigInt & {
    return entries_[r * cols_ + c];
  }

  [[nodiscard]] auto transpose() const -> IntegerMatrix;
  [[nodiscard]] auto submatrix(std::span<const std::size_t> row_indices,
                               std::span<const std::size_t> col_indices) const
      -> IntegerMatrix;
  void swap_rows(std::size_t a, std::size_t b);

  friend auto operator==(const IntegerMatrix &, const IntegerMatrix &) -> bool;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

auto block_diagonal(const IntegerMatrix &upper, const IntegerMatrix &lower)
    -> IntegerMatrix;
auto to_string(const IntegerMatrix &m) -> std::string;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
auto is_prime(std::uint64_t n) -> bool;

/// Matrix over Z/p for a machine-word prime p, entries reduced into [0, p).
class PrimeFieldMatrix {
public:
  /// Throws NonPrimeModulus unless p is prime and below 2^63.
  PrimeFieldMatrix(const IntegerMatrix &m, std::uint64_t modulus);

  [[nodiscard]] auto modulus() const noexcept -> std::uint64_t { return modulus_; }
  [[nodiscard]] auto rows() const noexcept -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const noexcept -> std::size_t { return cols_; }
  [[nodiscard]] auto at(std::size_t r, std::size_t c) const -> std::uint64_t {
    return entries_[r * cols_ + c];
  }
  [[nodiscard]] auto rank() const -> std::size_t;

private:
  std::uint64_t modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> entries_;
};

/// Rank over the rationals. Small matrices go through fraction-free
/// elimination, larger ones through rank_multimodular.
auto rank_exact(const IntegerMatrix &m) -> std::size_t;

/// Rank over the rationals from ranks modulo 61-bit primes. A prime that sees
/// rank r while the true rank exceeds r divides some nonzero (r+1)-minor, so
/// once the product of primes agreeing on r beats the Hadamard bound for
/// (r+1)-minors, r is exact.
auto rank_multimodular(const IntegerMatrix &m) -> std::size_t;

/// Rank of m reduced modulo a machine-word prime. Throws NonPrimeModulus.
auto rank_mod_p(const IntegerMatrix &m, std::uint64_t p) -> std::size_t;

/// Rank of m reduced modulo a prime of any size (caller attests primality
/// for p >= 2^63; smaller moduli are checked).
auto rank_mod_prime(const IntegerMatrix &m, const BigInt &p) -> std::size_t;

/// Exact determinant. Throws NonSquare.
auto determinant(const IntegerMatrix &m) -> BigInt;

struct MaximalMinor {
  BigInt value;
  /// Selected rows and columns in increasing order; value is the minor on them.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// A nonzero minor of order min(rows, cols): the first independent columns in
/// elimination order against the first rows that reach full rank.
/// Throws NotMaximalRank.
auto nonzero_maximal_minor(const IntegerMatrix &m) -> MaximalMinor;

/// Same, but rows and columns are scanned in the given priority orders, which
/// must be permutations of the row and column index ranges.
auto nonzero_maximal_minor(const IntegerMatrix &m,
                           std::span<const std::size_t> row_order,
                           std::span<const std::size_t> col_order) -> MaximalMinor;

} // namespace lefschetz
