#pragma once

// Slow, independent reimplementations used to check the library. Nothing here
// shares code with src/ beyond the plain data types.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/polynomial.hpp"

namespace oracle {

using lefschetz::IntegerMatrix;
using lefschetz::Monomial;

/// Gauss-Jordan over mpq_class.
auto rational_rank(const IntegerMatrix &m) -> std::size_t;
/// Rank over F_p by plain elimination with 128-bit products.
auto rank_mod(const IntegerMatrix &m, std::uint64_t p) -> std::size_t;
/// Laplace expansion along the first row; meant for n <= 8.
auto cofactor_det(const IntegerMatrix &m) -> mpz_class;

/// Every exponent vector of total degree d in r variables, in no particular order.
auto all_monomials(std::size_t r, unsigned d) -> std::vector<Monomial>;
/// m lies in the ideal iff some raw generator divides it.
auto member(const std::vector<Monomial> &generators, const Monomial &m) -> bool;
/// Hilbert function of R/<generators> by counting non-members degree by degree,
/// stopping at the first zero (caller guarantees artinian).
auto hilbert(std::size_t r, const std::vector<Monomial> &generators)
    -> std::vector<std::int64_t>;
/// Rank of multiplication by (x_1 + ... + x_r)^power from degree i to i+power,
/// over Q (p == 0) or F_p, building the matrix from scratch.
auto lefschetz_rank(std::size_t r, const std::vector<Monomial> &generators, unsigned i,
                    unsigned power, std::uint64_t p) -> std::size_t;

/// dim of the degree-d piece of R/<polys> over Q: all products of monomials
/// with generators, ranked with rational_rank.
auto polynomial_hilbert_value(std::size_t r, const std::vector<lefschetz::Polynomial> &polys,
                              unsigned d) -> std::int64_t;

/// Plane partitions in an a x b x c box by transfer over columns.
auto plane_partitions(unsigned a, unsigned b, unsigned c) -> mpz_class;
/// Permanent of a square 0/1 matrix by Ryser's formula.
auto permanent(const std::vector<std::vector<int>> &a) -> std::int64_t;

/// Macaulay's bound from a lex-segment shadow, in one more variable than is
/// needed to hold h monomials of degree d.
auto macaulay_bound(std::int64_t h, unsigned d) -> std::int64_t;

/// Coefficients of prod(1 - t^{d_i}) / (1 - t)^r up to degree len-1.
auto series(std::size_t r, const std::vector<unsigned> &degrees, std::size_t len)
    -> std::vector<std::int64_t>;

auto random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, long lo,
                   long hi) -> IntegerMatrix;

} // namespace oracle
