#include "lefschetz/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "lefschetz/aci.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/factor.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/linear_forms.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

namespace {

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

auto join(std::span<const unsigned> v) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

auto ideal3(unsigned a, unsigned b, unsigned c) -> MonomialIdeal {
  const std::array<unsigned, 3> e{a, b, c};
  return complete_intersection(e);
}

auto small_primes_below(unsigned n) -> std::vector<unsigned> {
  std::vector<unsigned> out;
  for (unsigned p = 2; p < n; ++p)
    if (is_prime(p))
      out.push_back(p);
  return out;
}

// All tuples in [lo, hi]^r.
auto tuples(std::size_t r, unsigned lo, unsigned hi) -> std::vector<std::vector<unsigned>> {
  std::vector<std::vector<unsigned>> out{{}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::vector<unsigned>> next;
    for (const auto &t : out)
      for (unsigned v = lo; v <= hi; ++v) {
        next.push_back(t);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

auto uniform_unsigned(std::mt19937_64 &rng, unsigned lo, unsigned hi) -> unsigned {
  return static_cast<unsigned>(uniform_int(rng, lo, hi));
}

// t distinct monomials of degree e in r variables.
auto random_socle(std::mt19937_64 &rng, std::size_t r, unsigned e, std::size_t t)
    -> std::vector<Monomial> {
  const auto all = monomials_of_degree(r, e);
  t = std::min(t, all.size());
  std::vector<std::size_t> picks;
  while (picks.size() < t) {
    const auto i = uniform_unsigned(rng, 0, static_cast<unsigned>(all.size() - 1));
    if (std::find(picks.begin(), picks.end(), i) == picks.end())
      picks.push_back(i);
  }
  std::vector<Monomial> out;
  for (auto i : picks)
    out.push_back(all[i]);
  return out;
}

const BigInt &example_determinant() {
  static const BigInt value = [] {
    BigInt v = 1;
    const std::pair<unsigned, unsigned> factors[] = {
        {2, 1}, {3, 2}, {5, 3}, {11, 4}, {13, 5}, {19, 1}, {23, 3}, {29, 1}, {5011, 1}};
    for (auto [p, e] : factors) {
      BigInt pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
      v *= pe;
    }
    return v;
  }();
  return value;
}

void brenner_kaid_fixture(CheckLog &log) {
  const MonomialIdeal I(3, {Monomial({3, 0, 0}), Monomial({0, 3, 0}),
                            Monomial({0, 0, 3}), Monomial({1, 1, 1})});
  const HVector h = I.hilbert_function();
  log.expect(h == HVector({1, 3, 6, 6, 3}), "h-vector " + h.to_string());
  const auto wlp = decide_wlp(I, 0);
  log.expect(!wlp.holds, "WLP reported to hold in characteristic 0");
  const auto profile = I.socle_profile();
  log.expect(profile.cm_type == 3, "socle type " + std::to_string(profile.cm_type));
  log.expect(profile.is_level, "not level");
}

void stanley_slp(CheckLog &log) {
  std::size_t count = 0;
  auto check = [&](const std::vector<unsigned> &a) {
    const auto report = decide_slp(complete_intersection(a), 0);
    log.expect(report.holds, "SLP fails for exponents (" + join(a) + ")");
    ++count;
  };
  for (std::size_t r = 1; r <= 3; ++r)
    for (const auto &a : tuples(r, 1, 5))
      check(a);
  for (const auto &a : tuples(4, 1, 3))
    check(a);
  log.note(std::to_string(count) + " complete intersections");
}

void characteristic_p(CheckLog &log) {
  for (unsigned p : {2U, 3U, 5U}) {
    log.expect(!decide_wlp(ideal3(p, p, p), p).holds,
               "<x^p,y^p,z^p> keeps the WLP mod " + std::to_string(p));
    const std::array<unsigned, 2> two{p, p};
    log.expect(decide_wlp(complete_intersection(two), p).holds,
               "<x^p,y^p> loses the WLP mod " + std::to_string(p));
  }
  const std::array<unsigned, 2> four{4, 4};
  log.expect(!decide_slp(complete_intersection(four), 2).holds,
             "<x^4,y^4> keeps the SLP mod 2");
}

void example_determinant_check(CheckLog &log) {
  const AciData d = aci_data(14, 21, 25, 2, 9, 13);
  log.expect(d.s == 26 && d.A == 14 && d.B == 7 && d.C == 3 && d.M == 4,
             "unexpected (s,A,B,C,M)");
  log.expect(d.all_conditions(), "conditions (i)-(v) not all satisfied");

  const auto n_start = Clock::now();
  const IntegerMatrix N = build_N(d);
  const BigInt det_n = abs(determinant(N));
  const double n_seconds = seconds_since(n_start);
  log.expect(N.rows() == 7 && N.cols() == 7, "N is not 7x7");
  log.expect(det_n == example_determinant(), "|det N| = " + det_n.get_str());
  log.expect(n_seconds < 1.0, "N determinant took " + std::to_string(n_seconds) + " s");

  const BigInt det_z = abs(determinant(build_Z(d)));
  log.expect(det_z == example_determinant(), "|det Z| = " + det_z.get_str());

  const MonomialIdeal I = d.ideal();
  const auto cert = bad_primes(I);
  const std::vector<BigInt> expected{2, 3, 5, 11, 13, 19, 23, 29, 5011};
  log.expect(cert.primes == expected, "bad primes differ from the nine expected");
  log.expect(!cert.unresolved_cofactor, "unresolved cofactor left over");
  for (unsigned p : {7U, 17U, 31U})
    log.expect(decide_wlp(I, p).holds, "WLP fails mod " + std::to_string(p));
  for (const auto &p : expected)
    log.expect(!decide_wlp(I, p.get_ui()).holds, "WLP holds mod " + p.get_str());
}

void nz_grid(CheckLog &log) {
  std::size_t count = 0;
  for (unsigned a = 1; a <= 5; ++a)
    for (unsigned b = 1; b <= 5; ++b)
      for (unsigned c = 1; c <= 5; ++c)
        for (unsigned al = 0; al <= 3; ++al)
          for (unsigned be = 0; be <= 3; ++be)
            for (unsigned ga = 0; ga <= 3; ++ga) {
              if (al >= a || be >= b || ga >= c || (al > 0) + (be > 0) + (ga > 0) < 2)
                continue;
              const AciData d = aci_data(a, b, c, al, be, ga);
              if (!d.all_conditions())
                continue;
              const BigInt n = abs(determinant(build_N(d)));
              const BigInt z = abs(determinant(build_Z(d)));
              log.expect(n == z, "|det N| != |det Z| at (" +
                                     join(std::array{a, b, c, al, be, ga}) + ")");
              ++count;
            }
  log.expect(count > 0, "no tuple satisfies the conditions");
  log.note(std::to_string(count) + " tuples");
}

void li_zanello(CheckLog &log) {
  const auto primes = small_primes_below(100);
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = a; b <= 3; ++b)
      for (unsigned c = b; c <= 3; ++c)
        for (unsigned p : primes)
          log.expect(li_zanello_equiv(a, b, c, p).holds(),
                     "equivalence fails at (" + join(std::array{a, b, c}) + "), p=" +
                         std::to_string(p));
  for (unsigned a = 1; a <= 27; ++a)
    for (unsigned b = 1; a * b <= 27; ++b)
      for (unsigned c = 1; a * b * c <= 27; ++c)
        log.expect(macmahon(a, b, c) == plane_partitions_bruteforce(a, b, c),
                   "MacMahon disagrees with enumeration at (" +
                       join(std::array{a, b, c}) + ")");
}

void brenner_kaid_char2_check(CheckLog &log) {
  std::vector<unsigned> holds;
  for (unsigned d = 1; d <= 12; ++d) {
    const bool wlp = decide_wlp(ideal3(d, d, d), 2).holds;
    if (wlp)
      holds.push_back(d);
    log.expect(wlp == brenner_kaid_char2(d),
               "formula and rank check disagree at d=" + std::to_string(d));
  }
  log.expect(holds == std::vector<unsigned>{1, 3, 5, 11}, "WLP holds for d in {" +
                                                              join(holds) + "}");
}

void froberg_example(CheckLog &log) {
  const std::vector<unsigned> cubes(5, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto cfg = sample_config(4, cubes, seed);
    const HVector h = power_ideal_hf(cfg);
    log.expect(h == HVector({1, 4, 10, 15, 15, 6}),
               "seed " + std::to_string(seed) + ": h = " + h.to_string());
    const auto v = wlp_powers(cfg);
    log.expect(!v.wlp_holds && v.status == VerdictStatus::Probable,
               "seed " + std::to_string(seed) + ": failure not reported");
    const auto it = std::find_if(v.evidence.begin(), v.evidence.end(),
                                 [](const DegreeEvidence &e) { return e.source_degree == 3; });
    log.expect(it != v.evidence.end() && !it->certified && it->restricted_dim == 1,
               "seed " + std::to_string(seed) + ": dim [R/(I,l)]_4 != 1");
  }
  const auto pred = froberg_prediction(3, cubes);
  log.expect(pred.terminated && pred.values == HVector({1, 3, 6, 5}),
             "prediction " + pred.values.to_string());
  log.expect(pred.values[4] == 0, "predicted degree-4 value is not 0");
  // The restriction to l = 0 is five cubes of general forms in three variables.
  const auto v = wlp_powers(sample_config(4, cubes, 0));
  for (const auto &e : v.evidence)
    if (e.source_degree == 3)
      log.expect(e.restricted_dim > pred.values[4],
                 "restricted cubes do not exceed the prediction in degree 4");
}

void schenck_seceleanu(CheckLog &log) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto rng = trial_rng(0x5353, k);
    const unsigned n = 3 + static_cast<unsigned>(k % 4);
    std::vector<unsigned> a;
    for (unsigned i = 0; i < n; ++i)
      a.push_back(uniform_unsigned(rng, 1, 5));
    const auto v = wlp_powers(sample_config(3, a, k));
    log.expect(v.wlp_holds && v.status == VerdictStatus::Certified,
               "exponents (" + join(a) + "), seed " + std::to_string(k) + " not certified");
  }
}

auto computed_prediction(const ProbabilisticVerdict &v) -> Prediction {
  return v.wlp_holds ? Prediction::Holds : Prediction::Fails;
}

void predictor_agreement(CheckLog &log) {
  const std::pair<unsigned, unsigned> five[] = {{2, 0}, {4, 0}, {3, 1},
                                                {3, 2}, {4, 1}, {4, 2}};
  for (auto [d, e] : five) {
    std::vector<unsigned> a(5, d);
    a.push_back(d + e);
    const auto v = wlp_powers(sample_config(5, a, 0));
    log.expect(computed_prediction(v) == predict_5vars(d, e),
               "five variables (d,e)=(" + std::to_string(d) + "," + std::to_string(e) +
                   "): computed " + std::string(to_string(computed_prediction(v))));
  }
  for (unsigned t = 1; t <= 3; ++t) {
    const auto v = wlp_powers(sample_config(4, std::vector<unsigned>(5, t), 0));
    log.expect(computed_prediction(v) == predict_uniform(4, 5, t),
               "uniform t=" + std::to_string(t) + " disagrees");
  }
  std::vector<std::vector<unsigned>> four{{3, 3, 3, 3, 3}, {3, 3, 3, 3, 10}};
  for (unsigned a = 2; a <= 5; ++a)
    four.push_back({2, a, a, a, a});
  for (const auto &a : four) {
    const Prediction p = predict_4vars(a);
    log.expect(p != Prediction::Open, "(" + join(a) + ") predicted open");
    const auto v = wlp_powers(sample_config(4, a, 0));
    log.expect(computed_prediction(v) == p, "(" + join(a) + "): predicted " +
                                                std::string(to_string(p)));
  }
  log.expect(predict_4vars(std::vector<unsigned>{3, 3, 3, 3, 3}) == Prediction::Fails,
             "(3,3,3,3,3) not predicted to fail");
}

void emsalem_iarrobino(CheckLog &log) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto rng = trial_rng(0x4549, k);
    const std::size_t r = 2 + k % 3;
    const unsigned n = uniform_unsigned(rng, static_cast<unsigned>(r), 6);
    std::vector<unsigned> a;
    for (unsigned i = 0; i < n; ++i)
      a.push_back(uniform_unsigned(rng, 1, 4));
    const auto cfg = sample_config(r, a, k);
    const HVector h = power_ideal_hf(cfg);
    const unsigned top = *std::max_element(a.begin(), a.end());
    for (unsigned j = top; j <= h.size(); ++j)
      log.expect(ei_fatpoint_dim(cfg, j) == h[j],
                 "r=" + std::to_string(r) + ", exponents (" + join(a) + "), j=" +
                     std::to_string(j));
  }
}

void general_ci(CheckLog &log) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = trial_rng(0x4349, seed);
    std::vector<unsigned> degrees;
    for (int i = 0; i < 3; ++i)
      degrees.push_back(uniform_unsigned(rng, 1, 4));
    const auto v = wlp_general_ci(sample_general_forms(3, degrees, seed));
    log.expect(v.wlp_holds && v.status == VerdictStatus::Certified,
               "degrees (" + join(degrees) + "), seed " + std::to_string(seed));
  }
}

void sequence_suite(CheckLog &log) {
  const std::vector<std::int64_t> stanley{1, 13, 12, 13, 1};
  log.expect(!is_unimodal(stanley), "(1,13,12,13,1) unimodal");
  log.expect(!is_SI_sequence(stanley), "(1,13,12,13,1) SI");
  log.expect(!wlp_hilbert_shape(stanley), "(1,13,12,13,1) has WLP shape");

  std::vector<MonomialIdeal> fixtures{
      MonomialIdeal(3, {Monomial({3, 0, 0}), Monomial({0, 3, 0}), Monomial({0, 0, 3}),
                        Monomial({1, 1, 1})}),
      aci_data(14, 21, 25, 2, 9, 13).ideal()};
  for (const auto &a : tuples(3, 1, 4))
    fixtures.push_back(complete_intersection(a));

  std::size_t level_checked = 0;
  std::size_t type2_checked = 0;
  for (std::uint64_t k = 0; level_checked < 50 || type2_checked < 50; ++k) {
    auto rng = trial_rng(0x4c56, k);
    const bool type2 = type2_checked < 50 && k % 2 == 1;
    const std::size_t r = type2 ? 3 : 2 + uniform_unsigned(rng, 0, 2);
    const unsigned e = uniform_unsigned(rng, 1, 8);
    const std::size_t t = type2 ? 2 : uniform_unsigned(rng, 1, 3);
    const auto socle = random_socle(rng, r, e, t);
    if (socle.size() != t)
      continue;
    const MonomialIdeal I = inverse_system_ideal(socle);
    const auto profile = I.socle_profile();
    log.expect(profile.is_level && profile.cm_type == t, "sampled algebra " +
                                                             I.to_string() +
                                                             " is not level of type " +
                                                             std::to_string(t));
    const HVector h = I.hilbert_function();
    if (type2) {
      const auto wlp = decide_wlp(I, 0);
      log.expect(wlp.holds, "type 2 algebra " + I.to_string() + " fails the WLP");
      ++type2_checked;
    } else if (level_checked < 50) {
      log.expect(hausel_check(I).holds, "Hausel injectivity fails for " + I.to_string());
      log.expect(hausel_halfcheck(h.values),
                 "first half of " + h.to_string() + " not differentiable");
      ++level_checked;
    }
    fixtures.push_back(I);
  }
  std::size_t shapes = 0;
  for (const auto &I : fixtures) {
    if (!decide_wlp(I, 0).holds)
      continue;
    const HVector h = I.hilbert_function();
    log.expect(wlp_hilbert_shape(h.values), h.to_string() + " lacks the WLP shape");
    ++shapes;
  }
  log.note(std::to_string(shapes) + " WLP fixtures checked for shape");
}

void hexagon_matchings(CheckLog &log) {
  for (unsigned a = 1; a <= 2; ++a) {
    const RegionGraph g = complete_intersection_region(a, a, a);
    const std::uint64_t tilings = count_matchings(g);
    const BigInt pp = macmahon(a, a, a);
    const BigInt z =
        abs(determinant(mult_matrix(ideal3(2 * a, 2 * a, 2 * a), 3 * a - 2, 1).matrix));
    log.expect(BigInt(static_cast<unsigned long>(tilings)) == pp && pp == z,
               "a=b=c=" + std::to_string(a) + ": matchings " + std::to_string(tilings) +
                   ", MacMahon " + pp.get_str() + ", |det Z| " + z.get_str());
  }
}

} // namespace

void CheckLog::expect(bool ok, const std::string &what) {
  ++checks_;
  if (!ok)
    failures_.push_back(what);
}

auto acceptance_criteria() -> std::vector<Criterion> {
  return {
      {1, "Brenner-Kaid fixture <x^3,y^3,z^3,xyz>", 1, brenner_kaid_fixture},
      {2, "SLP of monomial complete intersections", 60, stanley_slp},
      {3, "Characteristic p lemma", 5, characteristic_p},
      {4, "Determinant example (14,21,25,2,9,13)", 600, example_determinant_check},
      {5, "|det N| = |det Z| grid", 300, nz_grid},
      {6, "Li-Zanello plane partitions", 120, li_zanello},
      {7, "Brenner-Kaid characteristic 2", 120, brenner_kaid_char2_check},
      {8, "Cubes of five general forms in four variables", 30, froberg_example},
      {9, "Powers of linear forms in three variables", 120, schenck_seceleanu},
      {10, "Theorem predictors against computation", 600, predictor_agreement},
      {11, "Fat point dimensions", 120, emsalem_iarrobino},
      {12, "General complete intersections in three variables", 120, general_ci},
      {13, "Sequence suite", 300, sequence_suite},
      {14, "Hexagon matchings", 60, hexagon_matchings},
  };
}

auto run_criterion(const Criterion &c) -> CriterionResult {
  CriterionResult result;
  result.id = c.id;
  result.title = c.title;
  result.time_limit_seconds = c.time_limit_seconds;
  CheckLog log;
  const auto start = Clock::now();
  std::string error;
  try {
    c.run(log);
  } catch (const std::exception &e) {
    error = e.what();
  }
  result.seconds = seconds_since(start);
  result.checks = log.checks();
  const bool in_time = result.seconds < c.time_limit_seconds;
  result.passed = error.empty() && log.ok() && in_time;

  std::ostringstream detail;
  if (!error.empty())
    detail << "exception: " << error;
  for (std::size_t i = 0; i < log.failures().size() && i < 3; ++i)
    detail << (detail.tellp() > 0 ? "; " : "") << log.failures()[i];
  if (log.failures().size() > 3)
    detail << "; +" << log.failures().size() - 3 << " more";
  if (!in_time)
    detail << (detail.tellp() > 0 ? "; " : "") << "time limit exceeded";
  if (result.passed) {
    detail << log.checks() << " checks";
    for (const auto &n : log.notes())
      detail << ", " << n;
  }
  result.detail = detail.str();
  return result;
}

auto run_acceptance(std::span<const int> ids,
                    const std::function<void(const CriterionResult &)> &on_result)
    -> std::vector<CriterionResult> {
  std::vector<CriterionResult> out;
  for (const auto &c : acceptance_criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end())
      continue;
    out.push_back(run_criterion(c));
    if (on_result)
      on_result(out.back());
  }
  return out;
}

} // namespace lefschetz
