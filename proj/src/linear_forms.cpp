#include "lefschetz/linear_forms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

auto seeded(std::initializer_list<std::uint64_t> words) -> std::mt19937_64 {
  std::vector<std::uint32_t> halves;
  for (std::uint64_t w : words) {
    halves.push_back(static_cast<std::uint32_t>(w));
    halves.push_back(static_cast<std::uint32_t>(w >> 32U));
  }
  std::seed_seq seq(halves.begin(), halves.end());
  return std::mt19937_64(seq);
}

// Domain tags keep the streams for configs, forms and trials apart.
constexpr std::uint64_t kConfigTag = 0x4c46;
constexpr std::uint64_t kGeneralTag = 0x4746;
constexpr std::uint64_t kTrialTag = 0x5452;

void require_sampling(std::size_t num_vars, std::int64_t bound) {
  if (num_vars == 0)
    throw Error(ErrorCode::InvalidArgument, "need at least one variable");
  if (bound < 10)
    throw Error(ErrorCode::InvalidArgument,
                "coefficient bound " + std::to_string(bound) + " is below 10");
}

auto binomial(unsigned n, unsigned k) -> BigInt {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

auto all_multi_indices(std::size_t r, unsigned below) -> std::vector<Monomial> {
  std::vector<Monomial> out;
  for (unsigned t = 0; t < below; ++t)
    for (auto &m : monomials_of_degree(r, t))
      out.push_back(std::move(m));
  return out;
}

// Index of the only nonzero coordinate, if there is exactly one.
auto coordinate_index(const std::vector<BigInt> &form) -> std::optional<std::size_t> {
  std::optional<std::size_t> idx;
  for (std::size_t k = 0; k < form.size(); ++k) {
    if (sgn(form[k]) == 0)
      continue;
    if (idx)
      return std::nullopt;
    idx = k;
  }
  return idx;
}

// Bound on the socle degree: the forms contain a basis of R_1, so R/I is a
// quotient of a complete intersection of r of the powers.
auto socle_bound(const LinearFormConfig &cfg) -> unsigned {
  std::vector<unsigned> a = cfg.exponents;
  std::sort(a.rbegin(), a.rend());
  unsigned bound = 0;
  for (std::size_t i = 0; i < cfg.num_vars && i < a.size(); ++i)
    bound += a[i] > 0 ? a[i] - 1 : 0;
  return bound;
}

void require_spanning(const LinearFormConfig &cfg) {
  IntegerMatrix m(cfg.forms.size(), cfg.num_vars);
  for (std::size_t i = 0; i < cfg.forms.size(); ++i)
    for (std::size_t k = 0; k < cfg.num_vars; ++k)
      m(i, k) = cfg.forms[i][k];
  if (rank_exact(m) < cfg.num_vars)
    throw Error(ErrorCode::NotArtinianInstance,
                "the linear forms do not span the degree-1 space");
}

} // namespace

HomogeneousIdeal::HomogeneousIdeal(std::size_t num_vars,
                                   const std::vector<Polynomial> &generators)
    : num_vars_(num_vars) {
  std::vector<Monomial> monomials;
  for (const auto &g : generators) {
    if (g.num_vars() != num_vars)
      throw Error(ErrorCode::DimensionMismatch, "generator from a different ring");
    if (g.is_zero())
      continue;
    if (!g.is_homogeneous())
      throw Error(ErrorCode::InvalidArgument, g.to_string() + " is not homogeneous");
    if (const Monomial *m = g.as_monomial())
      monomials.push_back(*m);
    else
      polynomials_.push_back(g);
  }
  monomial_part_ = MonomialIdeal(num_vars, std::move(monomials));
  for (auto &p : polynomials_)
    p = p.reduce(monomial_part_);
  std::erase_if(polynomials_, [](const Polynomial &p) { return p.is_zero(); });
}

auto HomogeneousIdeal::hilbert_value(unsigned d) const -> std::int64_t {
  const auto &target = monomial_part_.piece(d);
  if (target.basis.empty())
    return 0;
  std::vector<std::vector<std::pair<std::size_t, const BigInt *>>> columns;
  for (const auto &f : polynomial_generators()) {
    const unsigned fd = f.degree();
    if (fd > d)
      continue;
    for (const auto &u : monomial_part_.standard_basis(d - fd)) {
      auto &col = columns.emplace_back();
      for (const auto &[m, c] : f.terms()) {
        auto it = target.index.find(u * m);
        if (it != target.index.end())
          col.emplace_back(it->second, &c);
      }
    }
  }
  if (columns.empty())
    return static_cast<std::int64_t>(target.basis.size());
  IntegerMatrix m(target.basis.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto &[row, c] : columns[j])
      m(row, j) = *c;
  return static_cast<std::int64_t>(target.basis.size() - rank_exact(m));
}

auto HomogeneousIdeal::hilbert_function(unsigned max_degree) const -> HVector {
  std::vector<std::int64_t> h;
  for (unsigned d = 0;; ++d) {
    const std::int64_t v = hilbert_value(d);
    if (v == 0)
      break;
    if (d > max_degree)
      throw Error(ErrorCode::NotArtinianInstance,
                  to_string() + " is nonzero in degree " + std::to_string(d));
    h.push_back(v);
  }
  return HVector(std::move(h));
}

auto HomogeneousIdeal::restrict_to(std::span<const BigInt> c) const
    -> HomogeneousIdeal {
  if (num_vars_ == 0 || c.size() + 1 != num_vars_)
    throw Error(ErrorCode::DimensionMismatch,
                "restriction needs " + std::to_string(num_vars_ - 1) + " coefficients");
  std::vector<BigInt> negated;
  for (const auto &x : c)
    negated.push_back(-x);
  const Polynomial value = Polynomial::linear_form(negated);
  std::vector<Polynomial> gens;
  for (const auto &m : monomial_part_.generators())
    gens.push_back(Polynomial(m).substitute_last(value));
  for (const auto &p : polynomials_)
    gens.push_back(p.substitute_last(value));
  return {num_vars_ - 1, gens};
}

auto HomogeneousIdeal::to_string() const -> std::string {
  std::string out = "<";
  bool first = true;
  for (const auto &m : monomial_part_.generators()) {
    out += (first ? "" : ", ") + m.to_string();
    first = false;
  }
  for (const auto &p : polynomials_) {
    out += (first ? "" : ", ") + p.to_string();
    first = false;
  }
  return out + ">";
}

auto uniform_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) -> std::int64_t {
  if (lo > hi)
    throw Error(ErrorCode::InvalidArgument, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0)
    return static_cast<std::int64_t>(rng());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t draw = rng();
  while (draw > limit)
    draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

auto uniform_coefficient(std::mt19937_64 &rng, std::int64_t bound) -> std::int64_t {
  return uniform_int(rng, -bound, bound);
}

auto trial_rng(std::uint64_t seed, std::uint64_t index) -> std::mt19937_64 {
  return seeded({kTrialTag, seed, index});
}

auto LinearFormConfig::ideal() const -> HomogeneousIdeal {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < forms.size(); ++i)
    gens.push_back(Polynomial::linear_form(forms[i]).pow(exponents[i]));
  return {num_vars, gens};
}

auto sample_config(std::size_t num_vars, std::vector<unsigned> exponents,
                   std::uint64_t seed, std::int64_t bound) -> LinearFormConfig {
  require_sampling(num_vars, bound);
  LinearFormConfig cfg;
  cfg.num_vars = num_vars;
  cfg.seed = seed;
  cfg.coefficient_bound = bound;
  auto rng = seeded({kConfigTag, num_vars, exponents.size(), seed,
                     static_cast<std::uint64_t>(bound)});
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::vector<BigInt> form(num_vars, 0);
    if (i < num_vars) {
      form[i] = 1;
    } else {
      bool nonzero = false;
      while (!nonzero)
        for (auto &c : form) {
          c = static_cast<long>(uniform_coefficient(rng, bound));
          nonzero = nonzero || sgn(c) != 0;
        }
    }
    cfg.forms.push_back(std::move(form));
  }
  cfg.exponents = std::move(exponents);
  return cfg;
}

auto power_ideal_hf(const LinearFormConfig &cfg) -> HVector {
  require_spanning(cfg);
  return cfg.ideal().hilbert_function(socle_bound(cfg));
}

auto froberg_prediction(std::size_t num_vars, std::span<const unsigned> degrees,
                        std::size_t max_length) -> FrobergSeries {
  if (num_vars == 0 || degrees.empty())
    throw Error(ErrorCode::InvalidArgument, "need r >= 1 and at least one degree");
  std::vector<BigInt> series(max_length, 0);
  if (max_length > 0)
    series[0] = 1;
  for (unsigned a : degrees)
    for (std::size_t k = max_length; k-- > a;)
      series[k] -= series[k - a];
  for (std::size_t r = 0; r < num_vars; ++r)
    for (std::size_t k = 1; k < max_length; ++k)
      series[k] += series[k - 1];
  FrobergSeries out;
  std::vector<std::int64_t> values;
  out.terminated = false;
  for (const auto &c : series) {
    if (sgn(c) <= 0) {
      out.terminated = true;
      break;
    }
    if (!c.fits_slong_p())
      throw Error(ErrorCode::TooLarge, "series coefficient exceeds 64 bits");
    values.push_back(c.get_si());
  }
  out.values = HVector(std::move(values));
  return out;
}

auto to_string(VerdictStatus s) -> std::string_view {
  switch (s) {
  case VerdictStatus::Certified: return "certified";
  case VerdictStatus::Probable: return "probable";
  case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

auto wlp_trials(const HomogeneousIdeal &ideal, unsigned max_degree, unsigned trials,
                std::uint64_t seed, std::int64_t bound) -> ProbabilisticVerdict {
  ProbabilisticVerdict v;
  v.hilbert = ideal.hilbert_function(max_degree);
  const HVector &h = v.hilbert;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    DegreeEvidence e;
    e.source_degree = static_cast<unsigned>(i);
    e.source_dim = h[i];
    e.target_dim = h[i + 1];
    e.expected_restricted_dim = h[i + 1] - std::min(h[i], h[i + 1]);
    e.restricted_dim = std::numeric_limits<std::int64_t>::max();
    v.evidence.push_back(e);
  }
  auto all_certified = [&] {
    return std::all_of(v.evidence.begin(), v.evidence.end(),
                       [](const DegreeEvidence &e) { return e.certified; });
  };

  for (unsigned t = 0; t < trials && !all_certified(); ++t) {
    auto rng = trial_rng(seed, t);
    std::vector<BigInt> c;
    for (std::size_t k = 0; k + 1 < ideal.num_vars(); ++k)
      c.emplace_back(static_cast<long>(uniform_coefficient(rng, bound)));
    const HomogeneousIdeal restricted = ideal.restrict_to(c);
    bool success = true;
    for (auto &e : v.evidence) {
      if (e.certified)
        continue;
      const std::int64_t q = restricted.hilbert_value(e.source_degree + 1);
      e.restricted_dim = std::min(e.restricted_dim, q);
      e.best_rank = std::max(e.best_rank, e.target_dim - q);
      if (q == e.expected_restricted_dim)
        e.certified = true;
      else
        success = false;
    }
    ++v.trials;
    v.successes += success ? 1 : 0;
  }

  v.wlp_holds = all_certified();
  if (v.wlp_holds)
    v.status = VerdictStatus::Certified;
  else if (v.trials > 0)
    v.status = VerdictStatus::Probable;
  else
    v.status = VerdictStatus::Inconclusive;
  for (auto &e : v.evidence)
    if (e.restricted_dim == std::numeric_limits<std::int64_t>::max())
      e.restricted_dim = e.expected_restricted_dim;
  return v;
}

auto wlp_powers(const LinearFormConfig &cfg, unsigned trials) -> ProbabilisticVerdict {
  require_spanning(cfg);
  return wlp_trials(cfg.ideal(), socle_bound(cfg), trials, cfg.seed,
                    cfg.coefficient_bound);
}

auto GeneralFormsConfig::ideal() const -> HomogeneousIdeal { return {num_vars, forms}; }

auto sample_general_forms(std::size_t num_vars, std::vector<unsigned> degrees,
                          std::uint64_t seed, std::int64_t bound)
    -> GeneralFormsConfig {
  require_sampling(num_vars, bound);
  if (std::find(degrees.begin(), degrees.end(), 0U) != degrees.end())
    throw Error(ErrorCode::InvalidArgument, "forms must have positive degree");
  GeneralFormsConfig cfg;
  cfg.num_vars = num_vars;
  cfg.seed = seed;
  cfg.coefficient_bound = bound;
  auto rng = seeded({kGeneralTag, num_vars, degrees.size(), seed,
                     static_cast<std::uint64_t>(bound)});
  for (unsigned d : degrees) {
    Polynomial f(num_vars);
    for (const auto &m : monomials_of_degree(num_vars, d))
      f.add_term(m, BigInt(static_cast<long>(uniform_coefficient(rng, bound))));
    cfg.forms.push_back(std::move(f));
  }
  cfg.degrees = std::move(degrees);
  return cfg;
}

auto wlp_general_ci(const GeneralFormsConfig &cfg, unsigned trials)
    -> ProbabilisticVerdict {
  if (cfg.forms.size() != cfg.num_vars)
    throw Error(ErrorCode::InvalidArgument,
                "a complete intersection needs one form per variable");
  unsigned bound = 0;
  for (unsigned d : cfg.degrees)
    bound += d - 1;
  return wlp_trials(cfg.ideal(), bound, trials, cfg.seed, cfg.coefficient_bound);
}

auto ei_fatpoint_dim(const LinearFormConfig &cfg, unsigned j) -> std::int64_t {
  const unsigned top = cfg.exponents.empty()
                           ? 0
                           : *std::max_element(cfg.exponents.begin(), cfg.exponents.end());
  if (j < top)
    throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(j) +
                                               " is below the largest exponent " +
                                               std::to_string(top));
  const std::size_t r = cfg.num_vars;

  // A coordinate point e_k imposes exactly the vanishing of the monomials
  // with exponent of x_k at least a_i.
  std::vector<Monomial> columns = monomials_of_degree(r, j);
  std::vector<std::size_t> general;
  for (std::size_t i = 0; i < cfg.forms.size(); ++i) {
    if (auto k = coordinate_index(cfg.forms[i])) {
      const unsigned a = cfg.exponents[i];
      std::erase_if(columns, [&](const Monomial &m) { return m[*k] >= a; });
    } else {
      general.push_back(i);
    }
  }
  if (general.empty() || columns.empty())
    return static_cast<std::int64_t>(columns.size());

  // Divided-power derivatives: (1/beta!) d^beta x^gamma at P is
  // C(gamma, beta) P^{gamma - beta}.
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i : general) {
    const auto &P = cfg.forms[i];
    std::vector<std::vector<BigInt>> powers(r, std::vector<BigInt>(j + 1, 1));
    for (std::size_t k = 0; k < r; ++k)
      for (unsigned e = 1; e <= j; ++e)
        powers[k][e] = powers[k][e - 1] * P[k];
    for (const auto &beta : all_multi_indices(r, j - cfg.exponents[i] + 1)) {
      std::vector<BigInt> row(columns.size(), 0);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const Monomial &gamma = columns[c];
        BigInt value = 1;
        for (std::size_t k = 0; k < r && sgn(value) != 0; ++k) {
          if (beta[k] > gamma[k]) {
            value = 0;
            break;
          }
          value *= binomial(gamma[k], beta[k]) * powers[k][gamma[k] - beta[k]];
        }
        row[c] = std::move(value);
      }
      rows.push_back(std::move(row));
    }
  }
  IntegerMatrix m(rows.size(), columns.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t c = 0; c < columns.size(); ++c)
      m(a, c) = std::move(rows[a][c]);
  return static_cast<std::int64_t>(columns.size() - rank_exact(m));
}

auto to_string(Prediction p) -> std::string_view {
  switch (p) {
  case Prediction::Holds: return "holds";
  case Prediction::Fails: return "fails";
  case Prediction::Open: return "open";
  case Prediction::ConjecturedFails: return "conjectured-fails";
  }
  return "unknown";
}

auto lambda_4vars(std::span<const unsigned> exponents) -> std::int64_t {
  if (exponents.size() < 4)
    throw Error(ErrorCode::InvalidArgument, "need a_1..a_4");
  const std::int64_t sum =
      std::accumulate(exponents.begin(), exponents.begin() + 4, std::int64_t{0});
  return sum % 2 == 0 ? sum / 2 - 2 : (sum - 7) / 2;
}

auto predict_4vars(std::span<const unsigned> exponents) -> Prediction {
  if (exponents.size() != 5)
    throw Error(ErrorCode::InvalidArgument, "four variables take five exponents");
  if (!std::is_sorted(exponents.begin(), exponents.end()))
    throw Error(ErrorCode::Unsorted, "exponents must be non-decreasing");
  if (exponents.front() < 2)
    throw Error(ErrorCode::InvalidArgument, "exponents must be at least 2");
  if (static_cast<std::int64_t>(exponents[4]) >= lambda_4vars(exponents) ||
      exponents[0] == 2)
    return Prediction::Holds;
  const bool uniform = exponents.front() == exponents.back();
  if (uniform && exponents.front() >= 3 && exponents.front() <= 12)
    return Prediction::Fails;
  return Prediction::Open;
}

auto predict_5vars(unsigned d, unsigned e) -> Prediction {
  if (d == 0)
    throw Error(ErrorCode::InvalidArgument, "d must be positive");
  const std::int64_t twice_e = 2 * std::int64_t{e};
  const std::int64_t three_d = 3 * std::int64_t{d};
  bool holds = false;
  if (e == 0)
    holds = d <= 3;
  else if (d % 2 == 1)
    holds = twice_e >= three_d - 5;
  else
    holds = twice_e >= three_d - 8;
  return holds ? Prediction::Holds : Prediction::Fails;
}

auto predict_uniform(std::size_t num_vars, std::size_t n_forms, unsigned t)
    -> Prediction {
  if (t == 0)
    throw Error(ErrorCode::InvalidArgument, "t must be positive");
  if (num_vars == 4 && n_forms == 5) {
    // Squares fall under a_1 = 2 of the four-variable theorem.
    const std::vector<unsigned> a(5, t);
    return t == 1 ? Prediction::Holds : predict_4vars(a) == Prediction::Holds
                                            ? Prediction::Holds
                                            : Prediction::Fails;
  }
  if (num_vars >= 6 && num_vars % 2 == 0 && n_forms == num_vars + 1)
    return t > 1 ? Prediction::Fails : Prediction::Holds;
  if (num_vars == 7 && n_forms == 8) {
    // t = 1 is the maximal ideal, whose quotient is the field.
    if (t <= 2)
      return Prediction::Holds;
    return t == 3 ? Prediction::ConjecturedFails : Prediction::Fails;
  }
  throw Error(ErrorCode::UnsupportedShape,
              std::to_string(num_vars) + " variables with " + std::to_string(n_forms) +
                  " forms");
}

} // namespace lefschetz
