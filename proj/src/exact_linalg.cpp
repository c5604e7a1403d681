#include "lefschetz/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

auto mul_mod(u64 a, u64 b, u64 m) -> u64 {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

auto pow_mod(u64 base, u64 exp, u64 m) -> u64 {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

auto inverse_mod(u64 a, u64 p) -> u64 { return pow_mod(a, p - 2, p); }

// Mersenne prime used for the full-rank shortcut in rank_exact.
constexpr u64 kProbePrime = (u64{1} << 61) - 1;

auto reduce(const BigInt &x, u64 p) -> u64 {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

auto rank_of_reduced(std::vector<u64> a, std::size_t rows, std::size_t cols,
                     u64 p) -> std::size_t {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const u64 inv = inverse_mod(a[rank * cols + c], p);
    for (std::size_t j = c; j < cols; ++j)
      a[rank * cols + j] = mul_mod(a[rank * cols + j], inv, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const u64 factor = a[i * cols + c];
      if (factor == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j) {
        const u64 sub = mul_mod(factor, a[rank * cols + j], p);
        u64 &x = a[i * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

struct Echelon {
  std::size_t rank = 0;
  // Original row indices in pivot order; the first `rank` are the pivot rows.
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> pivot_cols;
  BigInt last_pivot = 1;
  int swap_sign = 1;
};

// Fraction-free (Bareiss) echelon reduction with column skipping. After k
// pivots every remaining entry is the (k+1)-minor on the pivot rows/columns
// plus its own row and column, so the last pivot is the minor on all pivots.
auto bareiss(const IntegerMatrix &m) -> Echelon {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  Echelon e;
  e.row_order.resize(rows);
  std::iota(e.row_order.begin(), e.row_order.end(), std::size_t{0});
  std::vector<std::size_t> phys(rows);
  std::iota(phys.begin(), phys.end(), std::size_t{0});

  BigInt prev = 1;
  BigInt tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t i = r;
    while (i < rows && sgn(a[phys[i] * cols + c]) == 0)
      ++i;
    if (i == rows)
      continue;
    if (i != r) {
      std::swap(phys[i], phys[r]);
      std::swap(e.row_order[i], e.row_order[r]);
      e.swap_sign = -e.swap_sign;
    }
    const std::size_t pr = phys[r] * cols;
    const BigInt piv = a[pr + c];
    const bool unit_step = (piv == prev);
    for (std::size_t k = r + 1; k < rows; ++k) {
      const std::size_t row = phys[k] * cols;
      mpz_srcptr factor = a[row + c].get_mpz_t();
      const bool zero_factor = mpz_sgn(factor) == 0;
      if (zero_factor && unit_step)
        continue;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr x = a[row + j].get_mpz_t();
        if (zero_factor) {
          mpz_mul(x, x, piv.get_mpz_t());
          mpz_divexact(x, x, prev.get_mpz_t());
          continue;
        }
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), x);
        mpz_submul(tmp.get_mpz_t(), factor, a[pr + j].get_mpz_t());
        if (mpz_cmp_ui(prev.get_mpz_t(), 1) == 0)
          mpz_swap(x, tmp.get_mpz_t());
        else
          mpz_divexact(x, tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[row + c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  e.last_pivot = prev;
  return e;
}

auto permutation_sign(std::span<const std::size_t> values) -> int {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j])
        sign = -sign;
  return sign;
}

auto require_word_prime(u64 p) -> void {
  if (p >= (u64{1} << 63) || !is_prime(p))
    throw Error(ErrorCode::NonPrimeModulus,
                std::to_string(p) + " is not a machine-word prime");
}

auto is_permutation_of_range(std::span<const std::size_t> order, std::size_t n)
    -> bool {
  if (order.size() != n)
    return false;
  std::vector<bool> seen(n, false);
  for (auto idx : order) {
    if (idx >= n || seen[idx])
      return false;
    seen[idx] = true;
  }
  return true;
}

} // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
}

auto IntegerMatrix::identity(std::size_t n) -> IntegerMatrix {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

auto IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) -> IntegerMatrix {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<BigInt> entries;
  entries.reserve(r * c);
  for (const auto &row : rows) {
    if (row.size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    for (long v : row)
      entries.emplace_back(v);
  }
  return {r, c, std::move(entries)};
}

auto IntegerMatrix::transpose() const -> IntegerMatrix {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

auto IntegerMatrix::submatrix(std::span<const std::size_t> row_indices,
                              std::span<const std::size_t> col_indices) const
    -> IntegerMatrix {
  IntegerMatrix s(row_indices.size(), col_indices.size());
  for (std::size_t i = 0; i < row_indices.size(); ++i)
    for (std::size_t j = 0; j < col_indices.size(); ++j)
      s(i, j) = (*this)(row_indices[i], col_indices[j]);
  return s;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

auto operator==(const IntegerMatrix &a, const IntegerMatrix &b) -> bool {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

auto block_diagonal(const IntegerMatrix &upper, const IntegerMatrix &lower)
    -> IntegerMatrix {
  IntegerMatrix m(upper.rows() + lower.rows(), upper.cols() + lower.cols());
  for (std::size_t r = 0; r < upper.rows(); ++r)
    for (std::size_t c = 0; c < upper.cols(); ++c)
      m(r, c) = upper(r, c);
  for (std::size_t r = 0; r < lower.rows(); ++r)
    for (std::size_t c = 0; c < lower.cols(); ++c)
      m(upper.rows() + r, upper.cols() + c) = lower(r, c);
  return m;
}

auto to_string(const IntegerMatrix &m) -> std::string {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c)
      out << (c == 0 ? "" : ", ") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

auto is_prime(u64 n) -> bool {
  if (n < 2)
    return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases decide primality for all n < 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(const IntegerMatrix &m, std::uint64_t modulus)
    : modulus_(modulus), rows_(m.rows()), cols_(m.cols()) {
  require_word_prime(modulus);
  entries_.reserve(rows_ * cols_);
  for (const auto &x : m.entries())
    entries_.push_back(reduce(x, modulus_));
}

auto PrimeFieldMatrix::rank() const -> std::size_t {
  return rank_of_reduced(entries_, rows_, cols_, modulus_);
}

auto rank_mod_p(const IntegerMatrix &m, std::uint64_t p) -> std::size_t {
  return PrimeFieldMatrix(m, p).rank();
}

auto rank_mod_prime(const IntegerMatrix &m, const BigInt &p) -> std::size_t {
  if (p < 2)
    throw Error(ErrorCode::NonPrimeModulus, p.get_str() + " is not prime");
  if (mpz_fits_ulong_p(p.get_mpz_t()) && p.get_ui() < (u64{1} << 63))
    return rank_mod_p(m, p.get_ui());

  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  for (auto &x : a)
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  std::size_t rank = 0;
  BigInt inv;
  BigInt sub;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot * cols + c]) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a[pivot * cols + j], a[rank * cols + j]);
    mpz_invert(inv.get_mpz_t(), a[rank * cols + c].get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(a[i * cols + c]) == 0)
        continue;
      const BigInt factor = a[i * cols + c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        sub = factor * a[rank * cols + j];
        a[i * cols + j] -= sub;
        mpz_fdiv_r(a[i * cols + j].get_mpz_t(), a[i * cols + j].get_mpz_t(),
                   p.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

auto reduced_rank(const IntegerMatrix &m, u64 p) -> std::size_t {
  std::vector<u64> reduced;
  reduced.reserve(m.rows() * m.cols());
  for (const auto &x : m.entries())
    reduced.push_back(reduce(x, p));
  if (m.rows() > m.cols()) {
    // Eliminate along the short side.
    std::vector<u64> t(reduced.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        t[c * m.rows() + r] = reduced[r * m.cols() + c];
    return rank_of_reduced(std::move(t), m.cols(), m.rows(), p);
  }
  return rank_of_reduced(std::move(reduced), m.rows(), m.cols(), p);
}

// Upper bound on log2 of the Euclidean norms of the rows, largest first.
auto norm_bits(const IntegerMatrix &m, bool by_rows) -> std::vector<std::size_t> {
  const std::size_t outer = by_rows ? m.rows() : m.cols();
  const std::size_t inner = by_rows ? m.cols() : m.rows();
  std::vector<std::size_t> bits;
  BigInt sq;
  for (std::size_t i = 0; i < outer; ++i) {
    sq = 0;
    for (std::size_t j = 0; j < inner; ++j) {
      const BigInt &x = by_rows ? m(i, j) : m(j, i);
      mpz_addmul(sq.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
    }
    bits.push_back(sgn(sq) == 0 ? 0 : mpz_sizeinbase(sq.get_mpz_t(), 2) / 2 + 1);
  }
  std::sort(bits.rbegin(), bits.rend());
  return bits;
}

constexpr std::size_t kBareissCells = 4096;

} // namespace

auto rank_multimodular(const IntegerMatrix &m) -> std::size_t {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0)
    return 0;
  const auto row_bits = norm_bits(m, true);
  const auto col_bits = norm_bits(m, false);
  auto hadamard_bits = [&](std::size_t order) {
    std::size_t by_rows = 0;
    std::size_t by_cols = 0;
    for (std::size_t i = 0; i < order; ++i) {
      by_rows += row_bits[i];
      by_cols += col_bits[i];
    }
    return std::min(by_rows, by_cols);
  };

  std::size_t rank = 0;
  std::size_t agreeing_bits = 0;
  for (u64 p = kProbePrime; p > (u64{1} << 60); p -= 2) {
    if (!is_prime(p))
      continue;
    const std::size_t r = reduced_rank(m, p);
    if (r > rank) {
      rank = r;
      agreeing_bits = 0;
    }
    if (r == rank)
      agreeing_bits += 60;
    if (rank == full || agreeing_bits > hadamard_bits(rank + 1))
      return rank;
  }
  // Unreachable at any realistic size: the interval holds ~2^54 primes.
  throw Error(ErrorCode::InvalidArgument, "ran out of 61-bit primes");
}

auto rank_exact(const IntegerMatrix &m) -> std::size_t {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0)
    return 0;
  // Reduction can only lose rank, so full rank mod p is full rank over Q.
  if (reduced_rank(m, kProbePrime) == full)
    return full;
  if (m.rows() * m.cols() > kBareissCells)
    return rank_multimodular(m);
  if (m.rows() > m.cols())
    return bareiss(m.transpose()).rank;
  return bareiss(m).rank;
}

auto determinant(const IntegerMatrix &m) -> BigInt {
  if (!m.is_square())
    throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) +
                                          " matrix has no determinant");
  if (m.rows() == 0)
    return 1;
  const Echelon e = bareiss(m);
  if (e.rank < m.rows())
    return 0;
  return e.swap_sign * e.last_pivot;
}

auto nonzero_maximal_minor(const IntegerMatrix &m) -> MaximalMinor {
  std::vector<std::size_t> rows(m.rows());
  std::vector<std::size_t> cols(m.cols());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return nonzero_maximal_minor(m, rows, cols);
}

auto nonzero_maximal_minor(const IntegerMatrix &m,
                           std::span<const std::size_t> row_order,
                           std::span<const std::size_t> col_order) -> MaximalMinor {
  if (!is_permutation_of_range(row_order, m.rows()) ||
      !is_permutation_of_range(col_order, m.cols()))
    throw Error(ErrorCode::InvalidArgument, "priority orders must be permutations");
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0)
    return {BigInt(1), {}, {}};

  const IntegerMatrix permuted = m.submatrix(row_order, col_order);
  const Echelon e = bareiss(permuted);
  if (e.rank < full)
    throw Error(ErrorCode::NotMaximalRank,
                "rank " + std::to_string(e.rank) + " < " + std::to_string(full));

  // Map the pivot rows/columns back to original indices and fix the sign
  // for listing them in increasing order.
  std::vector<std::size_t> sel_rows;
  std::vector<std::size_t> sel_cols;
  for (std::size_t i = 0; i < e.rank; ++i)
    sel_rows.push_back(row_order[e.row_order[i]]);
  for (auto c : e.pivot_cols)
    sel_cols.push_back(col_order[c]);
  BigInt value = e.last_pivot;
  if (permutation_sign(sel_rows) * permutation_sign(sel_cols) < 0)
    value = -value;
  std::sort(sel_rows.begin(), sel_rows.end());
  std::sort(sel_cols.begin(), sel_cols.end());
  return {value, std::move(sel_rows), std::move(sel_cols)};
}

} // namespace lefschetz
