#include "wcount/constructions.hpp"

#include "wcount/errors.hpp"

#include <string>

namespace wcount {

LinearCode binary_full_spectrum(std::size_t k, std::size_t max_k) {
    if (k < 1) throw OutOfRange("binary_full_spectrum: k must be >= 1");
    if (k > max_k || k > 62)
        throw OutOfRange("binary_full_spectrum: k = " + std::to_string(k) + " above limit " + std::to_string(max_k));
    auto f = make_field(2);
    std::vector<Column> cols;
    for (std::size_t j = 1; j <= k; ++j) {
        Column c{std::vector<FieldElement>(k, FieldElement{0}), std::uint64_t{1} << (j - 1)};
        for (std::size_t row = 0; row < k - j + 1; ++row) c.entries[row] = f->one();
        cols.push_back(std::move(c));
    }
    return LinearCode(f, k, std::move(cols));
}

LinearCode two_dim_full(std::uint64_t q, std::optional<std::uint64_t> a_opt, std::optional<std::uint64_t> b_opt) {
    auto f = make_field(q);
    const std::uint64_t a = a_opt.value_or(q);
    const std::uint64_t b = b_opt.value_or(a + 1);
    if (a < q) throw PreconditionViolated("two_dim_full: need a >= q (a = " + std::to_string(a) + ")");
    if (b <= a) throw PreconditionViolated("two_dim_full: need b > a");
    const FieldElement omega = f->primitive_element();
    std::vector<Column> cols;
    FieldElement power = f->one();
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        cols.push_back({{power, f->one()}, i + 1});
        power = f->mul(power, omega);
    }
    cols.push_back({{f->one(), f->zero()}, a});
    cols.push_back({{f->zero(), f->one()}, b});
    return LinearCode(f, 2, std::move(cols));
}

LinearCode doubling_step(const LinearCode& code, std::optional<std::uint64_t> t, const SpectrumOptions& options) {
    const std::size_t k = code.dimension();
    if (rank(code) < k) throw RankDeficient("doubling_step: generator matrix does not have full rank");
    const std::uint64_t max_weight = weight_spectrum(code, options).max();
    const std::uint64_t tail = t.value_or(max_weight + 1);
    if (tail <= max_weight)
        throw PreconditionViolated("doubling_step: t = " + std::to_string(tail) + " must exceed the largest weight " +
                                   std::to_string(max_weight));
    std::vector<Column> cols;
    for (const auto& c : code.columns()) {
        Column ext{c.entries, c.multiplicity};
        ext.entries.push_back(FieldElement{0});
        cols.push_back(std::move(ext));
    }
    Column unit{std::vector<FieldElement>(k + 1, FieldElement{0}), tail};
    unit.entries[k] = code.field().one();
    cols.push_back(std::move(unit));
    return LinearCode(code.field_ptr(), k + 1, std::move(cols));
}

LinearCode iterated_doubling(std::size_t k, std::uint64_t q, const SpectrumOptions& options) {
    if (k < 2) throw OutOfRange("iterated_doubling: k must be >= 2");
    LinearCode code = two_dim_full(q);
    for (std::size_t i = 2; i < k; ++i) code = doubling_step(code, std::nullopt, options);
    return code;
}

LinearCode ambient_code(std::size_t k, std::uint64_t q) {
    if (k < 1) throw OutOfRange("ambient_code: k must be >= 1");
    auto f = make_field(q);
    std::vector<Column> cols;
    for (std::size_t i = 0; i < k; ++i) {
        Column c{std::vector<FieldElement>(k, FieldElement{0}), 1};
        c.entries[i] = f->one();
        cols.push_back(std::move(c));
    }
    return LinearCode(f, k, std::move(cols));
}

std::uint64_t iterated_doubling_weight_count(std::size_t k, std::uint64_t q) {
    if (k < 2) throw OutOfRange("iterated_doubling_weight_count: k must be >= 2");
    std::uint64_t count = q + 1;
    for (std::size_t i = 2; i < k; ++i) count = 2 * count + 1;
    return count;
}

}  // namespace wcount
