#pragma once

#include "wcount/bounds.hpp"
#include "wcount/code.hpp"
#include "wcount/nonlinear.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wcount {

/// Default cap for exhaustive searches: subspaces for the linear oracle, search nodes for the nonlinear one.
inline constexpr std::uint64_t kDefaultExhaustiveBudget = 10'000'000;

struct SearchOptions {
    /// Projective-point cap passed to each spectrum computation.
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    /// Cap on subspaces (linear) or search nodes (nonlinear) for exhaustive oracles.
    std::uint64_t exhaustive_budget = kDefaultExhaustiveBudget;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SearchReport {
    std::string kind;  ///< "random_linear", "exhaustive_L", "exhaustive_N", ...
    std::uint64_t n = 0;
    std::uint64_t k = 0;  ///< dimension (linear) or code size M (nonlinear)
    std::uint64_t q = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t best_count = 0;
    std::optional<LinearCode> linear_witness;
    std::optional<UnrestrictedCode> nonlinear_witness;
};

/**
 * Draws `trials` k x n generator matrices with i.i.d. uniform entries (resampling any of
 * rank < k) and keeps the one with the most distinct nonzero weights. Trial i uses a
 * generator seeded from (seed, i), so the result does not depend on scheduling; ties go
 * to the lexicographically smallest column multiset.
 */
SearchReport random_linear_search(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t trials,
                                  std::uint64_t seed, const SearchOptions& options = {});

/// One uniformly random full-rank [n,k]_q code for trial `trial` of master seed `seed`.
LinearCode random_full_rank_code(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t seed,
                                 std::uint64_t trial);

/// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// Exact L(n,k,q): the most distinct nonzero weights over all k-dimensional subspaces of
/// F_q^n, visiting each subspace once through its reduced row echelon generator matrix.
SearchReport exhaustive_L(std::uint64_t n, std::uint64_t k, std::uint64_t q, const SearchOptions& options = {});

/// Smallest n with exhaustive_L(n,k,q) >= target, scanning n upward from max(target, k).
std::uint64_t smallest_n0_linear(std::uint64_t k, std::uint64_t q, std::uint64_t target,
                                 const SearchOptions& options = {});

/// Exact N(n,M,q) by branch and bound over M-subsets of [0,q)^n with the first word fixed to zero.
SearchReport exhaustive_N(std::uint64_t n, std::uint64_t M, std::uint64_t q, const SearchOptions& options = {});

/// Smallest n with exhaustive_N(n,M,q) = C(M,2), scanning n upward from C(M,2).
std::uint64_t smallest_N0(std::uint64_t M, std::uint64_t q, const SearchOptions& options = {});

struct AuditCell {
    std::uint64_t n, k, q, value;
};

struct AuditCheck {
    std::string description;
    bool holds;
};

struct MonotonicityAudit {
    std::vector<AuditCell> cells;
    std::vector<AuditCheck> checks;
    bool all_hold() const;
    /// Throws OutOfRange when the cell is not on the grid.
    std::uint64_t value(std::uint64_t n, std::uint64_t k, std::uint64_t q) const;
};

/// exhaustive_L over q in {2,3,4}, k <= 3, k <= n <= 6, with every monotonicity and
/// counting inequality between grid cells checked.
MonotonicityAudit monotonicity_audit(const SearchOptions& options = {});

enum class TablePreset { table1, table2 };
enum class TableScale { desk, full };

struct TableRow {
    std::uint64_t k, q, n;
    std::uint64_t published;  ///< value printed in the table
    bool published_is_exact;  ///< table2 prints L(k,q) =, table1 prints L(k,q) >=
    BigInt upper;
    std::uint64_t trials = 0;
    std::uint64_t best_count = 0;
    bool skipped = false;
    std::string reason;
};

/// Re-runs the random long-code experiments. Desk scale uses n = 10^4, keeps q <= 13 and
/// skips rows whose enumeration work exceeds 5e7; full scale uses n = 6,000,000.
std::vector<TableRow> run_table(TablePreset preset, TableScale scale, std::uint64_t trials, std::uint64_t seed,
                                const SearchOptions& options = {});

}  // namespace wcount
