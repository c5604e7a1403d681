#include "lefschetz/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}

auto Monomial::one(std::size_t num_vars) -> Monomial {
  return Monomial(std::vector<unsigned>(num_vars, 0));
}

auto Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power)
    -> Monomial {
  std::vector<unsigned> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

auto Monomial::divides(const Monomial &other) const -> bool {
  if (exps_.size() != other.exps_.size() || degree_ > other.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

auto Monomial::cofactor_in(const Monomial &other) const -> Monomial {
  std::vector<unsigned> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

auto Monomial::times_variable(std::size_t index) const -> Monomial {
  Monomial m = *this;
  ++m.exps_.at(index);
  ++m.degree_;
  return m;
}

auto Monomial::pure_power_variable() const -> std::optional<std::size_t> {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (var)
      return std::nullopt;
    var = i;
  }
  return var;
}

auto operator*(const Monomial &a, const Monomial &b) -> Monomial {
  if (a.num_vars() != b.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "monomials from different rings");
  std::vector<unsigned> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

auto Monomial::to_string(std::span<const std::string> names) const -> std::string {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += names[i];
    if (exps_[i] > 1)
      out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

auto Monomial::to_string() const -> std::string {
  const auto names = canonical_variable_names(exps_.size());
  return to_string(names);
}

auto MonomialHash::operator()(const Monomial &m) const noexcept -> std::size_t {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (unsigned e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

auto revlex_greater(const Monomial &a, const Monomial &b) -> bool {
  if (a.degree() != b.degree())
    return a.degree() > b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i];
  }
  return false;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned> &current,
               std::span<const unsigned> caps, std::vector<Monomial> &out) {
  const std::size_t r = current.size();
  if (var + 1 == r) {
    if (caps.empty() || remaining <= caps[var]) {
      current[var] = remaining;
      out.emplace_back(current);
    }
    return;
  }
  const unsigned top = caps.empty() ? remaining : std::min(remaining, caps[var]);
  for (unsigned e = top + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, caps, out);
  }
  current[var] = 0;
}

} // namespace

auto monomials_of_degree(std::size_t num_vars, unsigned degree,
                         std::span<const unsigned> caps) -> std::vector<Monomial> {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0)
      out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> current(num_vars, 0);
  enumerate(0, degree, current, caps, out);
  std::sort(out.begin(), out.end(), revlex_greater);
  return out;
}

auto canonical_variable_names(std::size_t num_vars) -> std::vector<std::string> {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

HVector::HVector(std::vector<std::int64_t> v) : values(std::move(v)) {
  while (!values.empty() && values.back() == 0)
    values.pop_back();
}

auto HVector::total() const -> std::int64_t {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

auto HVector::to_string() const -> std::string {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? "," : "") << values[i];
  out << ')';
  return out.str();
}

struct MonomialIdeal::Cache {
  std::mutex mutex;
  std::map<unsigned, std::unique_ptr<const DegreePiece>> pieces;
};

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars), cache_(std::make_shared<Cache>()) {
  for (const auto &g : generators)
    if (g.num_vars() != num_vars)
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + g.to_string() + " does not live in " +
                      std::to_string(num_vars) + " variables");
  std::sort(generators.begin(), generators.end(),
            [](const Monomial &a, const Monomial &b) {
              if (a.degree() != b.degree())
                return a.degree() < b.degree();
              return revlex_greater(a, b);
            });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  // Increasing degree, so a divisor of g can only appear before g.
  for (const auto &g : generators) {
    const bool redundant = std::any_of(
        generators_.begin(), generators_.end(),
        [&](const Monomial &kept) { return kept.divides(g); });
    if (!redundant)
      generators_.push_back(g);
  }
}

auto MonomialIdeal::contains(const Monomial &m) const -> bool {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial &g) { return g.divides(m); });
}

auto MonomialIdeal::pure_power(std::size_t i) const -> std::optional<unsigned> {
  for (const auto &g : generators_) {
    if (g.degree() == 0)
      return 0U;
    if (auto v = g.pure_power_variable(); v && *v == i)
      return g[i];
  }
  return std::nullopt;
}

auto MonomialIdeal::is_artinian() const -> bool {
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (!pure_power(i))
      return false;
  return true;
}

auto MonomialIdeal::socle_degree_bound() const -> unsigned {
  if (!is_artinian())
    throw Error(ErrorCode::NotArtinian, to_string() + " is not artinian");
  unsigned bound = 0;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    const unsigned a = *pure_power(i);
    bound += a > 0 ? a - 1 : 0;
  }
  return bound;
}

auto MonomialIdeal::piece(unsigned d) const -> const DegreePiece & {
  const std::lock_guard lock(cache_->mutex);
  auto &slot = cache_->pieces[d];
  if (!slot) {
    auto p = std::make_unique<DegreePiece>();
    std::vector<unsigned> caps;
    if (is_artinian()) {
      for (std::size_t i = 0; i < num_vars_; ++i) {
        const unsigned a = *pure_power(i);
        caps.push_back(a > 0 ? a - 1 : 0);
      }
      if (std::any_of(generators_.begin(), generators_.end(),
                      [](const Monomial &g) { return g.degree() == 0; })) {
        slot = std::move(p);
        return *slot;
      }
    }
    for (auto &m : monomials_of_degree(num_vars_, d, caps))
      if (!contains(m))
        p->basis.push_back(std::move(m));
    for (std::size_t i = 0; i < p->basis.size(); ++i)
      p->index.emplace(p->basis[i], i);
    slot = std::move(p);
  }
  return *slot;
}

auto MonomialIdeal::standard_basis(unsigned d) const -> const std::vector<Monomial> & {
  return piece(d).basis;
}

auto MonomialIdeal::hilbert_function() const -> HVector {
  const unsigned bound = socle_degree_bound();
  std::vector<std::int64_t> h;
  for (unsigned d = 0; d <= bound; ++d) {
    const auto n = static_cast<std::int64_t>(standard_basis(d).size());
    if (n == 0)
      break;
    h.push_back(n);
  }
  return HVector(std::move(h));
}

auto MonomialIdeal::socle_profile() const -> SocleProfile {
  const HVector h = hilbert_function();
  SocleProfile profile;
  for (std::size_t d = 0; d < h.size(); ++d) {
    for (const auto &m : standard_basis(static_cast<unsigned>(d))) {
      bool socle = true;
      for (std::size_t i = 0; i < num_vars_ && socle; ++i)
        socle = contains(m.times_variable(i));
      if (socle) {
        profile.socle_monomials.push_back(m);
        profile.socle_degrees.push_back(static_cast<unsigned>(d));
      }
    }
  }
  profile.cm_type = profile.socle_monomials.size();
  profile.is_level =
      !profile.socle_degrees.empty() &&
      profile.socle_degrees.front() == profile.socle_degrees.back();
  return profile;
}

auto MonomialIdeal::to_string() const -> std::string {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out += (i ? ", " : "") + generators_[i].to_string();
  return out + ">";
}

auto minimalize(std::vector<Monomial> generators, std::size_t num_vars)
    -> MonomialIdeal {
  return {num_vars, std::move(generators)};
}

auto is_artinian(const MonomialIdeal &ideal) -> bool { return ideal.is_artinian(); }

auto standard_basis(const MonomialIdeal &ideal, unsigned degree)
    -> std::vector<Monomial> {
  return ideal.standard_basis(degree);
}

auto hilbert_function(const MonomialIdeal &ideal) -> HVector {
  return ideal.hilbert_function();
}

auto socle_profile(const MonomialIdeal &ideal) -> SocleProfile {
  return ideal.socle_profile();
}

auto complete_intersection(std::span<const unsigned> exponents) -> MonomialIdeal {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    gens.push_back(Monomial::variable(exponents.size(), i, exponents[i]));
  return {exponents.size(), std::move(gens)};
}

auto inverse_system_ideal(std::span<const Monomial> socle) -> MonomialIdeal {
  if (socle.empty())
    throw Error(ErrorCode::InvalidArgument, "inverse system needs a monomial");
  const std::size_t r = socle.front().num_vars();
  unsigned top = 0;
  for (const auto &m : socle) {
    if (m.num_vars() != r)
      throw Error(ErrorCode::InvalidArgument, "monomials from different rings");
    top = std::max(top, m.degree());
  }
  std::vector<Monomial> gens;
  for (unsigned d = 0; d <= top + 1; ++d)
    for (auto &m : monomials_of_degree(r, d))
      if (std::none_of(socle.begin(), socle.end(),
                       [&](const Monomial &s) { return m.divides(s); }))
        gens.push_back(std::move(m));
  return {r, std::move(gens)};
}

} // namespace lefschetz
