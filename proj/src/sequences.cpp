#include "lefschetz/sequences.hpp"

#include <algorithm>

#include "lefschetz/error.hpp"
#include "lefschetz/exact_linalg.hpp"

namespace lefschetz {

namespace {

auto binomial(unsigned long n, unsigned long k) -> BigInt {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

auto has_negative(std::span<const std::int64_t> s) -> bool {
  return std::any_of(s.begin(), s.end(), [](std::int64_t v) { return v < 0; });
}

} // namespace

auto macaulay_bound(std::int64_t h, unsigned d) -> std::int64_t {
  if (h < 0 || d == 0)
    throw Error(ErrorCode::InvalidArgument,
                "macaulay_bound needs h >= 0 and d >= 1");
  BigInt rest = static_cast<long>(h);
  BigInt bound = 0;
  for (unsigned i = d; i >= 1 && sgn(rest) > 0; --i) {
    // Largest k with C(k, i) <= rest.
    unsigned long k = i;
    while (binomial(k + 1, i) <= rest)
      ++k;
    rest -= binomial(k, i);
    bound += binomial(k + 1, i + 1);
  }
  if (!bound.fits_slong_p())
    throw Error(ErrorCode::TooLarge, "Macaulay bound exceeds 64 bits");
  return bound.get_si();
}

auto first_difference(std::span<const std::int64_t> s) -> std::vector<std::int64_t> {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < s.size(); ++i)
    d.push_back(i == 0 ? s[0] : s[i] - s[i - 1]);
  return d;
}

auto is_O_sequence(std::span<const std::int64_t> s) -> bool {
  if (s.empty())
    return true;
  if (s[0] != 1 || has_negative(s))
    return false;
  for (std::size_t d = 1; d + 1 < s.size(); ++d)
    if (s[d + 1] > macaulay_bound(s[d], static_cast<unsigned>(d)))
      return false;
  return true;
}

auto is_unimodal(std::span<const std::int64_t> s) -> bool {
  if (has_negative(s))
    return false;
  bool decreased = false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < s[i - 1])
      decreased = true;
    else if (s[i] > s[i - 1] && decreased)
      return false;
  }
  return true;
}

auto is_strictly_unimodal(std::span<const std::int64_t> s) -> bool {
  if (!is_unimodal(s))
    return false;
  bool decreased = false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < s[i - 1])
      decreased = true;
    else if (decreased && s[i] != 0)
      return false;
  }
  return true;
}

auto is_differentiable_O(std::span<const std::int64_t> s) -> bool {
  if (has_negative(s))
    return false;
  return is_O_sequence(first_difference(s));
}

auto is_SI_sequence(std::span<const std::int64_t> s) -> bool {
  if (!std::equal(s.begin(), s.end(), s.rbegin()))
    return false;
  return is_differentiable_O(s.first((s.size() + 1) / 2));
}

auto wlp_hilbert_shape(std::span<const std::int64_t> s) -> bool {
  if (has_negative(s))
    return false;
  const auto diff = first_difference(s);
  const auto turn = std::find_if(diff.begin(), diff.end(),
                                 [](std::int64_t v) { return v <= 0; });
  if (!is_O_sequence(std::span(diff.begin(), turn)))
    return false;
  return std::all_of(turn, diff.end(), [](std::int64_t v) { return v <= 0; });
}

auto hausel_halfcheck(std::span<const std::int64_t> h) -> bool {
  if (h.empty())
    return true;
  const auto e = static_cast<std::int64_t>(h.size()) - 1;
  // floor((e-1)/2) + 1, with floor(-1/2) = -1.
  const std::int64_t last = (e >= 1 ? (e - 1) / 2 : -1) + 1;
  const auto len = std::min<std::size_t>(h.size(), static_cast<std::size_t>(last + 1));
  return is_differentiable_O(h.first(len));
}

} // namespace lefschetz
