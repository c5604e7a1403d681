#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lefschetz {

/// x_1^{e_1} ... x_r^{e_r}; the exponent vector length fixes the ambient ring.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static auto one(std::size_t num_vars) -> Monomial;
  static auto variable(std::size_t num_vars, std::size_t index, unsigned power = 1)
      -> Monomial;

  [[nodiscard]] auto num_vars() const noexcept -> std::size_t { return exps_.size(); }
  [[nodiscard]] auto degree() const noexcept -> unsigned { return degree_; }
  [[nodiscard]] auto exponents() const noexcept -> std::span<const unsigned> {
    return exps_;
  }
  auto operator[](std::size_t i) const -> unsigned { return exps_[i]; }

  [[nodiscard]] auto divides(const Monomial &other) const -> bool;
  /// Requires divides(other); returns other / *this.
  [[nodiscard]] auto cofactor_in(const Monomial &other) const -> Monomial;
  [[nodiscard]] auto times_variable(std::size_t index) const -> Monomial;
  /// Index of the variable when this is a pure power x_i^k with k >= 1.
  [[nodiscard]] auto pure_power_variable() const -> std::optional<std::size_t>;

  friend auto operator*(const Monomial &a, const Monomial &b) -> Monomial;
  friend auto operator==(const Monomial &a, const Monomial &b) -> bool = default;
  friend auto operator<=>(const Monomial &a, const Monomial &b) = default;

  /// Renders with the given variable names ("x^2*y"); "1" for the unit.
  [[nodiscard]] auto to_string(std::span<const std::string> names) const
      -> std::string;
  /// Renders with canonical names x1..xr.
  [[nodiscard]] auto to_string() const -> std::string;

private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  auto operator()(const Monomial &m) const noexcept -> std::size_t;
};

/// Degree-compatible reverse lexicographic order: true when a precedes b.
auto revlex_greater(const Monomial &a, const Monomial &b) -> bool;

/// All monomials of degree d in r variables, revlex-descending
/// (x1^d first, xr^d last). Optional per-variable exponent caps.
auto monomials_of_degree(std::size_t num_vars, unsigned degree,
                         std::span<const unsigned> caps = {})
    -> std::vector<Monomial>;

auto canonical_variable_names(std::size_t num_vars) -> std::vector<std::string>;

/// Finite Hilbert function of an artinian graded algebra. Trailing zeros are
/// stripped on construction.
struct HVector {
  std::vector<std::int64_t> values;

  HVector() = default;
  explicit HVector(std::vector<std::int64_t> v);

  [[nodiscard]] auto size() const noexcept -> std::size_t { return values.size(); }
  [[nodiscard]] auto empty() const noexcept -> bool { return values.empty(); }
  /// Zero beyond the stored range.
  auto operator[](std::size_t d) const -> std::int64_t {
    return d < values.size() ? values[d] : 0;
  }
  /// Last degree with a positive value; -1 for the zero algebra.
  [[nodiscard]] auto socle_degree() const -> std::ptrdiff_t {
    return static_cast<std::ptrdiff_t>(values.size()) - 1;
  }
  [[nodiscard]] auto total() const -> std::int64_t;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const HVector &, const HVector &) -> bool = default;
};

struct SocleProfile {
  std::vector<Monomial> socle_monomials;
  /// One entry per socle monomial, increasing.
  std::vector<unsigned> socle_degrees;
  std::size_t cm_type = 0;
  bool is_level = false;
};

/// Monomial ideal held by its unique minimal generating set. Immutable; graded
/// pieces of the quotient are computed on demand and cached.
class MonomialIdeal {
public:
  struct DegreePiece {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };

  MonomialIdeal() : MonomialIdeal(0, {}) {}
  /// Divisibility-reduces the generators. Throws DimensionMismatch.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  [[nodiscard]] auto num_vars() const noexcept -> std::size_t { return num_vars_; }
  [[nodiscard]] auto generators() const noexcept -> const std::vector<Monomial> & {
    return generators_;
  }

  [[nodiscard]] auto contains(const Monomial &m) const -> bool;
  [[nodiscard]] auto is_artinian() const -> bool;
  /// Exponent of the pure power of variable i among the generators, if any.
  [[nodiscard]] auto pure_power(std::size_t i) const -> std::optional<unsigned>;

  /// Standard monomials of degree d in revlex-descending order.
  [[nodiscard]] auto standard_basis(unsigned d) const -> const std::vector<Monomial> &;
  [[nodiscard]] auto piece(unsigned d) const -> const DegreePiece &;
  /// Upper bound on the socle degree of an artinian quotient. Throws NotArtinian.
  [[nodiscard]] auto socle_degree_bound() const -> unsigned;

  /// Throws NotArtinian.
  [[nodiscard]] auto hilbert_function() const -> HVector;
  /// Throws NotArtinian.
  [[nodiscard]] auto socle_profile() const -> SocleProfile;

  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const MonomialIdeal &a, const MonomialIdeal &b) -> bool {
    return a.num_vars_ == b.num_vars_ && a.generators_ == b.generators_;
  }

private:
  struct Cache;

  std::size_t num_vars_;
  std::vector<Monomial> generators_;
  std::shared_ptr<Cache> cache_;
};

auto minimalize(std::vector<Monomial> generators, std::size_t num_vars)
    -> MonomialIdeal;
auto is_artinian(const MonomialIdeal &ideal) -> bool;
auto standard_basis(const MonomialIdeal &ideal, unsigned degree)
    -> std::vector<Monomial>;
auto hilbert_function(const MonomialIdeal &ideal) -> HVector;
auto socle_profile(const MonomialIdeal &ideal) -> SocleProfile;

/// <x1^{a1}, ..., xr^{ar}>.
auto complete_intersection(std::span<const unsigned> exponents) -> MonomialIdeal;

/// Largest monomial ideal whose quotient contains the given monomials: the
/// annihilator of their inverse system. With all monomials of one degree the
/// quotient is level with exactly these socle elements. Throws InvalidArgument
/// when the list is empty or mixes rings.
auto inverse_system_ideal(std::span<const Monomial> socle) -> MonomialIdeal;

} // namespace lefschetz
