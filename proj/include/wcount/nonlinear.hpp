#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace wcount {

/// An unrestricted code: M >= 2 distinct words of length n over the integer alphabet [0, q).
class UnrestrictedCode {
  public:
    /// Throws PreconditionViolated for q < 2, fewer than two words, duplicates or ragged
    /// lengths, and OutOfRange for symbols >= q.
    UnrestrictedCode(std::uint32_t alphabet_size, std::vector<std::vector<std::uint32_t>> words);

    std::uint32_t alphabet_size() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::vector<std::uint32_t>>& words() const { return words_; }

  private:
    std::uint32_t q_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> words_;
};

/// Number of coordinates where the words differ.
std::size_t hamming_distance(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y);

/// {d(x, y) : x != y codewords}.
std::set<std::size_t> distance_spectrum(const UnrestrictedCode& code);

/// Strictly increasing weights 0 = w_0 < w_1 < ... of nested run-of-ones codewords.
class StepCode {
  public:
    /// Throws PreconditionViolated unless the sequence starts at 0 and strictly increases.
    explicit StepCode(std::vector<std::uint64_t> weights);

    const std::vector<std::uint64_t>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

  private:
    std::vector<std::uint64_t> weights_;
};

enum class SidonStrategy {
    greedy,   ///< each new weight is the smallest keeping all differences distinct
    doubling  ///< w_i = 2^i - 1
};

/// A weight sequence of size M whose C(M,2) pairwise differences are all distinct; M >= 2.
StepCode sidon_chain(std::size_t M, SidonStrategy strategy = SidonStrategy::greedy);

/// Word i is w_i ones followed by zeros; the length is the largest weight.
UnrestrictedCode step_to_code(const StepCode& sc, std::uint32_t q);

/// C(M, 2), the maximum number of distances among M words; M >= 2.
std::uint64_t n_upper(std::uint64_t M);

struct DifferenceSet {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> residues;  ///< sorted

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

/// True iff every nonzero residue mod v is a difference a - b (a, b in the set) exactly once.
bool is_perfect_difference_set(const DifferenceSet& ds);

/**
 * Planar difference set with v = s^2 + s + 1 and s + 1 residues.
 *
 * GF(s^3) is built as GF(s)[X]/(c) for the smallest monic irreducible cubic c with root
 * beta. With alpha primitive in GF(s^3), the set is {i mod v : alpha^i in span(1, beta)}.
 * Throws NotAPrimePower, and ResourceLimit when s^3 > 2^20.
 */
DifferenceSet singer_difference_set(std::uint64_t s);

/// Lexicographically smallest set of `size` residues mod v containing 0 that is a perfect
/// difference set, found by backtracking; nullopt-like empty residues when none exists.
/// Throws ResourceLimit for v > 200.
DifferenceSet search_difference_set(std::uint64_t v, std::size_t size);

/// Rows g_i with v_i leading ones, length s^2 + s + 1, alphabet [0, q).
UnrestrictedCode singer_code(std::uint64_t s, std::uint32_t q);

/// Upper bound on the shortest length carrying C(M,2) distances among M words over any alphabet.
std::uint64_t n0_upper(std::uint64_t M, std::uint32_t q);

}  // namespace wcount
