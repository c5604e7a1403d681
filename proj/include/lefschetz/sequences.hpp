#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lefschetz {

/// Largest value admissible in degree d+1 after value h in degree d, from the
/// d-th binomial expansion h = C(k_d, d) + C(k_{d-1}, d-1) + ... .
/// Throws InvalidArgument when h < 0 or d == 0.
auto macaulay_bound(std::int64_t h, unsigned d) -> std::int64_t;

/// Negative entries make every predicate below false.
auto is_O_sequence(std::span<const std::int64_t> s) -> bool;
/// Weakly increasing, then weakly decreasing.
auto is_unimodal(std::span<const std::int64_t> s) -> bool;
/// Unimodal, and strictly decreasing from the first decrease on.
auto is_strictly_unimodal(std::span<const std::int64_t> s) -> bool;
/// (s_0, s_1 - s_0, s_2 - s_1, ...) is an O-sequence.
auto is_differentiable_O(std::span<const std::int64_t> s) -> bool;
/// Symmetric, and the first ceil(len/2) entries form a differentiable
/// O-sequence.
auto is_SI_sequence(std::span<const std::int64_t> s) -> bool;
/// The positive part of the first difference is an O-sequence and the
/// difference stays non-positive afterwards.
auto wlp_hilbert_shape(std::span<const std::int64_t> s) -> bool;
/// Entries 0..floor((e-1)/2)+1 of an h-vector of socle degree e form a
/// differentiable O-sequence.
auto hausel_halfcheck(std::span<const std::int64_t> h) -> bool;

/// (s_0, s_1 - s_0, ...).
auto first_difference(std::span<const std::int64_t> s) -> std::vector<std::int64_t>;

} // namespace lefschetz
