#pragma once

#include "wcount/code.hpp"

#include <cstdint>
#include <optional>

namespace wcount {

/// Largest k accepted by binary_full_spectrum unless the caller raises it.
inline constexpr std::size_t kDefaultMaxBinaryDimension = 20;

/**
 * The [2^k - 1, k]_2 code with nested runs of ones: row j (1 = top) starts with
 * 2^(k-j+1) - 1 ones. Block j of the length has size 2^(j-1) and carries the column with
 * ones in rows 1..k-j+1. Every integer in [1, 2^k - 1] is the weight of exactly one
 * nonzero codeword.
 */
LinearCode binary_full_spectrum(std::size_t k, std::size_t max_k = kDefaultMaxBinaryDimension);

/**
 * Two-dimensional q-ary code with q+1 distinct nonzero weights.
 *
 * Rows u, v overlap on C(q,2) coordinates where v is 1 and u is w^i on i+1 of them
 * (w the primitive element, i = 0..q-2); u has a further `a` private ones and v has `b`.
 * Requires a >= q and b > a. Defaults give the shortest length C(q,2) + 2q + 1.
 */
LinearCode two_dim_full(std::uint64_t q, std::optional<std::uint64_t> a = std::nullopt,
                        std::optional<std::uint64_t> b = std::nullopt);

/**
 * Appends a new last row that is zero on the old coordinates and one on t new ones.
 * The new spectrum is old, {t} and t + old, pairwise disjoint when t > max(old).
 * Default t = max(old) + 1. Throws RankDeficient if the code does not have full rank and
 * PreconditionViolated if t <= max weight.
 */
LinearCode doubling_step(const LinearCode& code, std::optional<std::uint64_t> t = std::nullopt,
                         const SpectrumOptions& options = {});

/// two_dim_full(q) followed by k-2 default doubling steps; k >= 2.
LinearCode iterated_doubling(std::size_t k, std::uint64_t q, const SpectrumOptions& options = {});

/// F_q^k itself: identity columns, spectrum {1..k}.
LinearCode ambient_code(std::size_t k, std::uint64_t q);

/// Number of weights iterated_doubling(k, q) must carry: L -> 2L+1 applied k-2 times to q+1.
std::uint64_t iterated_doubling_weight_count(std::size_t k, std::uint64_t q);

}  // namespace wcount
