#pragma once

#include "wcount/field.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wcount {

/// Default cap on projective points enumerated by a single spectrum computation.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// One distinct generator-matrix column and the number of coordinates carrying it.
struct Column {
    std::vector<FieldElement> entries;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const Column&, const Column&) = default;
};

/**
 * A linear [n,k]_q code given by its generator matrix, stored as the multiset of its columns.
 *
 * Weights depend only on which distinct columns occur and how often, so the length n may
 * be in the millions while the object stays small. Duplicate columns passed to the
 * constructor are merged; columns are kept sorted by entries.
 */
class LinearCode {
  public:
    /// Throws DimensionMismatch for columns of the wrong size, OutOfRange for bad entries,
    /// PreconditionViolated for dimension 0, a zero multiplicity or an empty code.
    LinearCode(FieldPtr field, std::size_t dimension, std::vector<Column> columns);

    /// Builds the column multiset of an explicit k x n generator matrix given row by row.
    static LinearCode from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t dimension() const { return dimension_; }
    std::uint64_t length() const { return length_; }
    std::span<const Column> columns() const { return columns_; }
    /// Zero when the column does not occur.
    std::uint64_t multiplicity_of(std::span<const FieldElement> column) const;

  private:
    FieldPtr field_;
    std::size_t dimension_;
    std::vector<Column> columns_;
    std::uint64_t length_ = 0;
};

/// Distinct nonzero weights of a code, strictly increasing.
class WeightSpectrum {
  public:
    WeightSpectrum() = default;
    /// Sorts and deduplicates; zero entries are dropped.
    explicit WeightSpectrum(std::vector<std::uint64_t> weights);

    const std::vector<std::uint64_t>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }
    bool contains(std::uint64_t w) const;
    /// Largest weight, 0 for an empty spectrum.
    std::uint64_t max() const { return weights_.empty() ? 0 : weights_.back(); }

    friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;

  private:
    std::vector<std::uint64_t> weights_;
};

struct SpectrumOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Split the code into direct summands (row blocks sharing no column) before enumerating.
    bool decompose = true;
};

/// Hamming weight of the codeword uG.
std::uint64_t weight_of_message(const LinearCode& code, std::span<const FieldElement> message);

/**
 * The set of weights of all nonzero codewords.
 *
 * Every nonzero multiple of a codeword has the same weight, so only messages whose first
 * nonzero entry is 1 are visited. When the generator matrix is block diagonal (up to a
 * row permutation) each block is enumerated alone and the results are combined as the
 * sumset of the blocks, which is exact. Throws ResourceLimit when the number of
 * projective points to visit exceeds options.budget.
 */
WeightSpectrum weight_spectrum(const LinearCode& code, const SpectrumOptions& options = {});

std::size_t num_distinct_weights(const LinearCode& code, const SpectrumOptions& options = {});

/// Appends t zero coordinates; requires t >= 1.
LinearCode extend_with_zero_columns(const LinearCode& code, std::uint64_t t);

/// Rank over GF(q) of the k x (#distinct columns) matrix.
std::size_t rank(const LinearCode& code);

/// (q^k - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::uint64_t k, std::uint64_t q);

/// Calls visit(u) for every message whose first nonzero entry is 1, in lexicographic order.
template <typename Visit>
void for_each_projective_message(const Field& field, std::size_t k, Visit&& visit) {
    const std::uint32_t q = field.order();
    std::vector<FieldElement> u(k);
    for (std::size_t lead = k; lead-- > 0;) {
        std::fill(u.begin(), u.end(), FieldElement{0});
        u[lead] = field.one();
        while (true) {
            visit(std::span<const FieldElement>(u));
            std::size_t pos = k;
            while (pos-- > lead + 1) {
                if (++u[pos].value < q) break;
                u[pos].value = 0;
            }
            if (pos == lead) break;
        }
    }
}

}  // namespace wcount
