#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// Sparse polynomial with integer coefficients; zero terms are never stored.
class Polynomial {
public:
  using Terms = std::map<Monomial, BigInt>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  Polynomial(const Monomial &m, BigInt coefficient = 1);

  /// sum_k coefficients[k] * x_k.
  static auto linear_form(std::span<const BigInt> coefficients) -> Polynomial;

  [[nodiscard]] auto num_vars() const noexcept -> std::size_t { return num_vars_; }
  [[nodiscard]] auto terms() const noexcept -> const Terms & { return terms_; }
  [[nodiscard]] auto is_zero() const noexcept -> bool { return terms_.empty(); }
  /// The single monomial when there is exactly one term.
  [[nodiscard]] auto as_monomial() const -> const Monomial *;
  [[nodiscard]] auto is_homogeneous() const -> bool;
  /// Degree of the leading term in revlex; 0 for the zero polynomial.
  [[nodiscard]] auto degree() const -> unsigned;

  void add_term(const Monomial &m, const BigInt &coefficient);

  friend auto operator+(const Polynomial &a, const Polynomial &b) -> Polynomial;
  friend auto operator*(const Polynomial &a, const Polynomial &b) -> Polynomial;
  friend auto operator==(const Polynomial &a, const Polynomial &b) -> bool = default;
  [[nodiscard]] auto times(const Monomial &m) const -> Polynomial;
  [[nodiscard]] auto pow(unsigned e) const -> Polynomial;

  /// Replaces the last variable by `value`, a polynomial in the first r-1
  /// variables; the result lives in r-1 variables.
  [[nodiscard]] auto substitute_last(const Polynomial &value) const -> Polynomial;

  /// Drops the terms lying in a monomial ideal.
  [[nodiscard]] auto reduce(const MonomialIdeal &ideal) const -> Polynomial;

  [[nodiscard]] auto to_string() const -> std::string;

private:
  std::size_t num_vars_;
  Terms terms_;
};

} // namespace lefschetz
