#include "lefschetz/factor.hpp"

#include <mutex>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

auto small_primes(std::uint64_t bound) -> std::vector<std::uint64_t> {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find(bound);
  if (it != cache.end())
    return it->second;
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i)
      composite[j] = true;
  }
  return cache.emplace(bound, std::move(out)).first->second;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or nullopt.
auto pollard_brent(const BigInt &n, unsigned long seed, std::uint64_t budget)
    -> std::optional<BigInt> {
  BigInt y = seed % n;
  const BigInt c = (seed * 7919UL + 1) % n;
  BigInt g = 1;
  BigInt q = 1;
  BigInt x;
  BigInt ys;
  std::uint64_t r = 1;
  std::uint64_t spent = 0;
  constexpr std::uint64_t kBlock = 128;
  auto step = [&](BigInt &v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1 && spent < budget) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i)
      step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(kBlock, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        BigInt diff = x - y;
        q = q * abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      spent += lim;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time from the saved block start.
    do {
      step(ys);
      BigInt diff = abs(BigInt(x - ys));
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == 1 || g == n)
    return std::nullopt;
  return g;
}

void split(const BigInt &n, const FactorOptions &options, Factorization &out,
           BigInt &stuck) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out.primes[n];
    return;
  }
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    if (auto d = pollard_brent(n, 2 + attempt, options.rho_iterations)) {
      split(*d, options, out, stuck);
      split(n / *d, options, out, stuck);
      return;
    }
  }
  stuck *= n;
}

} // namespace

auto Factorization::product() const -> BigInt {
  BigInt p = 1;
  for (const auto &[prime, mult] : primes) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), mult);
    p *= pw;
  }
  if (unfactored_cofactor)
    p *= *unfactored_cofactor;
  return p;
}

auto Factorization::to_string() const -> std::string {
  std::string s;
  for (const auto &[prime, mult] : primes) {
    if (!s.empty())
      s += " * ";
    s += prime.get_str();
    if (mult > 1)
      s += "^" + std::to_string(mult);
  }
  if (unfactored_cofactor) {
    if (!s.empty())
      s += " * ";
    s += "[" + unfactored_cofactor->get_str() + "]";
  }
  return s.empty() ? "1" : s;
}

auto is_prime(const BigInt &n) -> bool {
  if (n < 2)
    return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()))
    return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p))
      return false;
  const BigInt nm1 = n - 1;
  BigInt d = nm1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
    const BigInt base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
      continue;
    bool composite = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  static const BigInt kProvenBelow("3317044064679887385961981");
  return n < kProvenBelow || mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

auto factor(const BigInt &n, const FactorOptions &options) -> Factorization {
  if (n == 0)
    throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  Factorization out;
  BigInt rest = abs(n);
  for (std::uint64_t p : small_primes(options.trial_division_bound)) {
    if (p > options.trial_division_bound)
      break;
    if (BigInt(p) * p > rest)
      break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++out.primes[BigInt(p)];
    }
  }
  BigInt stuck = 1;
  split(rest, options, out, stuck);
  if (stuck != 1)
    out.unfactored_cofactor = stuck;
  return out;
}

} // namespace lefschetz
