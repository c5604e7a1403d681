#include "lefschetz/polynomial.hpp"

#include <algorithm>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

void require_same_ring(const Polynomial &a, const Polynomial &b) {
  if (a.num_vars() != b.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "polynomials from different rings");
}

} // namespace

Polynomial::Polynomial(const Monomial &m, BigInt coefficient)
    : num_vars_(m.num_vars()) {
  add_term(m, coefficient);
}

auto Polynomial::linear_form(std::span<const BigInt> coefficients) -> Polynomial {
  Polynomial p(coefficients.size());
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p.add_term(Monomial::variable(coefficients.size(), k), coefficients[k]);
  return p;
}

auto Polynomial::as_monomial() const -> const Monomial * {
  return terms_.size() == 1 ? &terms_.begin()->first : nullptr;
}

auto Polynomial::is_homogeneous() const -> bool {
  if (terms_.empty())
    return true;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto &[m, c] : terms_)
    if (m.degree() != d)
      return false;
  return true;
}

auto Polynomial::degree() const -> unsigned {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial &m, const BigInt &coefficient) {
  if (m.num_vars() != num_vars_)
    throw Error(ErrorCode::DimensionMismatch, "term from a different ring");
  if (sgn(coefficient) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted)
    return;
  it->second += coefficient;
  if (sgn(it->second) == 0)
    terms_.erase(it);
}

auto operator+(const Polynomial &a, const Polynomial &b) -> Polynomial {
  require_same_ring(a, b);
  Polynomial sum = a;
  for (const auto &[m, c] : b.terms_)
    sum.add_term(m, c);
  return sum;
}

auto operator*(const Polynomial &a, const Polynomial &b) -> Polynomial {
  require_same_ring(a, b);
  Polynomial product(a.num_vars_);
  BigInt c;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      c = ca * cb;
      product.add_term(ma * mb, c);
    }
  return product;
}

auto Polynomial::times(const Monomial &m) const -> Polynomial {
  Polynomial out(num_vars_);
  for (const auto &[t, c] : terms_)
    out.terms_.emplace(t * m, c);
  return out;
}

auto Polynomial::pow(unsigned e) const -> Polynomial {
  Polynomial result(Monomial::one(num_vars_));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    e >>= 1U;
    if (e > 0)
      base = base * base;
  }
  return result;
}

auto Polynomial::substitute_last(const Polynomial &value) const -> Polynomial {
  if (num_vars_ == 0 || value.num_vars() + 1 != num_vars_)
    throw Error(ErrorCode::DimensionMismatch,
                "substitution value must live in one fewer variable");
  std::vector<Polynomial> powers{Polynomial(Monomial::one(value.num_vars()))};
  Polynomial out(value.num_vars());
  for (const auto &[m, c] : terms_) {
    const unsigned e = m[num_vars_ - 1];
    while (powers.size() <= e)
      powers.push_back(powers.back() * value);
    std::vector<unsigned> rest(m.exponents().begin(), m.exponents().end() - 1);
    const Monomial head(std::move(rest));
    for (const auto &[t, tc] : powers[e].terms_)
      out.add_term(head * t, c * tc);
  }
  return out;
}

auto Polynomial::reduce(const MonomialIdeal &ideal) const -> Polynomial {
  Polynomial out(num_vars_);
  for (const auto &[m, c] : terms_)
    if (!ideal.contains(m))
      out.terms_.emplace(m, c);
  return out;
}

auto Polynomial::to_string() const -> std::string {
  if (terms_.empty())
    return "0";
  std::string out;
  // Highest revlex term first.
  std::vector<const Terms::value_type *> order;
  for (const auto &t : terms_)
    order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto *a, auto *b) { return revlex_greater(a->first, b->first); });
  for (const auto *t : order) {
    const BigInt &c = t->second;
    const bool unit = t->first.degree() > 0 && (c == 1 || c == -1);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    const BigInt magnitude = abs(c);
    if (!unit)
      out += magnitude.get_str();
    if (t->first.degree() > 0)
      out += (unit ? "" : "*") + t->first.to_string();
  }
  return out;
}

} // namespace lefschetz
