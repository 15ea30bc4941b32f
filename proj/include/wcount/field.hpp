#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace wcount {

/// An element of GF(p^e), encoded as the integer sum c_i p^i of its coefficients
/// in the polynomial basis 1, X, ..., X^(e-1).
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Largest field order the library constructs.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/**
 * GF(q), q = p^e, realized as GF(p)[X]/(f) where f is the lexicographically smallest
 * monic irreducible polynomial of degree e (coefficients compared from X^(e-1) down to X^0).
 *
 * Fields with q <= 2^16 precompute log/antilog tables so mul and inv are table lookups.
 * Larger fields multiply polynomials directly. Instances are immutable once built.
 */
class Field {
  public:
    /// Throws NotAPrimePower for q = 1 or q with two prime factors, OutOfRange for q > 2^20.
    static std::shared_ptr<const Field> make(std::uint64_t q);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t order() const { return q_; }
    /// Coefficients of the modulus, lowest degree first, leading 1 included (size degree()+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// Throws OutOfRange unless v < order().
    FieldElement element(std::uint64_t v) const;
    /// Builds an element from exactly degree() coefficients in [0, p); throws DimensionMismatch / OutOfRange.
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const {
        if (p_ == 2) return {a.value ^ b.value};
        if (e_ == 1) {
            std::uint32_t s = a.value + b.value;
            return {s >= p_ ? s - p_ : s};
        }
        if (!add_table_.empty()) return {add_table_[a.value * q_ + b.value]};
        return add_digits(a, b);
    }
    FieldElement neg(FieldElement a) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.value == 0 || b.value == 0) return {0};
        if (!exp_.empty()) return {exp_[log_[a.value] + log_[b.value]]};
        return mul_poly(a, b);
    }
    /// Throws DivisionByZero for a = 0.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t exponent) const;

    /// The smallest element (in encoding order) of multiplicative order q-1. For q = 2 this is 1.
    FieldElement primitive_element() const { return primitive_; }
    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(FieldElement a) const;

  private:
    Field(std::uint32_t p, std::uint32_t e);

    FieldElement add_digits(FieldElement a, FieldElement b) const;
    FieldElement mul_poly(FieldElement a, FieldElement b) const;
    FieldElement pow_poly(FieldElement a, std::uint64_t exponent) const;
    FieldElement find_primitive() const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    FieldElement primitive_{1};
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Alias matching the operation name used throughout the tools.
inline FieldPtr make_field(std::uint64_t q) { return Field::make(q); }

/// True iff the monic polynomial (coefficients lowest first, leading 1 included) is irreducible over GF(p).
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace wcount
