#include "wcount/code.hpp"
#include "wcount/constructions.hpp"
#include "wcount/errors.hpp"

#include <doctest.h>

#include <limits>
#include <random>
#include <set>

using namespace wcount;

namespace {

std::vector<FieldElement> v(std::initializer_list<std::uint32_t> xs) {
    std::vector<FieldElement> out;
    for (auto x : xs) out.push_back(FieldElement{x});
    return out;
}

// Expands the column multiset into an explicit generator matrix and weighs all q^k codewords.
std::set<std::uint64_t> brute_force_spectrum(const LinearCode& code) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();
    std::vector<std::vector<FieldElement>> cols;
    for (const auto& c : code.columns())
        for (std::uint64_t m = 0; m < c.multiplicity; ++m) cols.push_back(c.entries);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= f.order();
    std::set<std::uint64_t> out;
    std::vector<FieldElement> u(k);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < k; ++i, x /= f.order()) u[i] = FieldElement{static_cast<std::uint32_t>(x % f.order())};
        std::vector<FieldElement> word(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < k; ++i) word[j] = f.add(word[j], f.mul(u[i], cols[j][i]));
        std::uint64_t w = 0;
        for (auto s : word) w += s.value != 0;
        if (w) out.insert(w);
    }
    return out;
}

LinearCode random_code(std::mt19937_64& rng, std::uint64_t q, std::size_t k, std::size_t n) {
    auto f = make_field(q);
    std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(q - 1));
    std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(n));
    for (auto& r : rows)
        for (auto& x : r) x = FieldElement{sym(rng)};
    return LinearCode::from_rows(f, rows);
}

}  // namespace

TEST_CASE("LinearCode invariants") {
    auto f = make_field(3);
    LinearCode c(f, 2, {{v({1, 0}), 2}, {v({1, 0}), 3}, {v({0, 1}), 1}});
    CHECK(c.columns().size() == 2);
    CHECK(c.length() == 6);
    CHECK(c.multiplicity_of(v({1, 0})) == 5);
    CHECK(c.multiplicity_of(v({2, 2})) == 0);
    CHECK_THROWS_AS(LinearCode(f, 2, {{v({1}), 1}}), DimensionMismatch);
    CHECK_THROWS_AS(LinearCode(f, 2, {{v({1, 3}), 1}}), OutOfRange);
    CHECK_THROWS_AS(LinearCode(f, 2, {{v({1, 1}), 0}}), PreconditionViolated);
    CHECK_THROWS_AS(LinearCode(f, 0, {}), PreconditionViolated);
    CHECK_THROWS_AS(LinearCode(f, 2, {}), PreconditionViolated);
}

TEST_CASE("weight_of_message examples") {
    auto f2 = make_field(2);
    LinearCode c(f2, 2, {{v({1, 0}), 1}, {v({1, 1}), 2}});
    CHECK(weight_of_message(c, v({0, 0})) == 0);
    CHECK(weight_of_message(c, v({0, 1})) == 2);
    CHECK(weight_of_message(c, v({1, 0})) == 3);
    CHECK(weight_of_message(c, v({1, 1})) == 1);
    CHECK_THROWS_AS(weight_of_message(c, v({1})), DimensionMismatch);

    // Full-spectrum k=2 code: the all-ones row of length 3 over the single-one row.
    const LinearCode full = binary_full_spectrum(2);
    CHECK(weight_of_message(full, v({1, 1})) == 2);
}

TEST_CASE("weight_spectrum examples") {
    CHECK(weight_spectrum(ambient_code(3, 2)).weights() == std::vector<std::uint64_t>{1, 2, 3});
    auto f2 = make_field(2);
    const LinearCode rep(f2, 1, {{v({1}), 5}});
    CHECK(weight_spectrum(rep).weights() == std::vector<std::uint64_t>{5});
    CHECK(num_distinct_weights(rep) == 1);
    CHECK(weight_spectrum(two_dim_full(3)).weights() == std::vector<std::uint64_t>{6, 7, 8, 9});
    CHECK(num_distinct_weights(binary_full_spectrum(3)) == 7);
    CHECK(num_distinct_weights(two_dim_full(5)) == 6);
}

TEST_CASE("extend_with_zero_columns keeps the spectrum") {
    const LinearCode c = binary_full_spectrum(2);
    const LinearCode e1 = extend_with_zero_columns(c, 1);
    CHECK(e1.length() == 4);
    CHECK(weight_spectrum(e1) == weight_spectrum(c));
    const LinearCode e5 = extend_with_zero_columns(c, 5);
    CHECK(e5.length() == 8);
    CHECK(weight_spectrum(e5).weights() == std::vector<std::uint64_t>{1, 2, 3});
    CHECK_THROWS_AS(extend_with_zero_columns(c, 0), PreconditionViolated);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const LinearCode r = random_code(rng, 3, 2, 7);
        CHECK(weight_spectrum(extend_with_zero_columns(r, 1 + i % 4)) == weight_spectrum(r));
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(ambient_code(3, 5)) == 3);
    auto f3 = make_field(3);
    CHECK(rank(LinearCode(f3, 2, {{v({0, 0}), 4}})) == 0);
    CHECK(rank(LinearCode(f3, 2, {{v({1, 1}), 1}, {v({2, 2}), 1}})) == 1);
    auto f4 = make_field(4);
    // (1, X) and (X, X^2) are proportional over GF(4).
    CHECK(rank(LinearCode(f4, 2, {{v({1, 2}), 1}, {v({2, 3}), 1}})) == 1);
}

TEST_CASE("column-multiset spectrum equals brute-force expansion") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t qs[] = {2, 3, 4, 5};
        const std::uint64_t q = qs[trial % 4];
        const std::size_t k = 1 + trial % 3;
        const std::size_t n = 1 + rng() % 64;
        const LinearCode c = random_code(rng, q, k, n);
        const auto expected = brute_force_spectrum(c);
        const auto got = weight_spectrum(c);
        REQUIRE(std::vector<std::uint64_t>(expected.begin(), expected.end()) == got.weights());
        SpectrumOptions plain;
        plain.decompose = false;
        REQUIRE(weight_spectrum(c, plain) == got);
        REQUIRE(got.size() <= std::min<std::uint64_t>(n, projective_point_count(k, q)));
    }
}

TEST_CASE("block-diagonal codes: decomposition matches plain enumeration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t q = trial % 2 ? 3 : 2;
        auto f = make_field(q);
        // Rows split into two or three groups with columns supported inside a single group.
        const std::size_t k = 3 + trial % 3;
        std::vector<std::size_t> group(k);
        for (std::size_t i = 0; i < k; ++i) group[i] = rng() % 3;
        std::vector<Column> cols;
        const std::size_t ncols = 2 + rng() % 8;
        for (std::size_t j = 0; j < ncols; ++j) {
            const std::size_t g = rng() % 3;
            Column c{std::vector<FieldElement>(k), 1 + rng() % 5};
            for (std::size_t i = 0; i < k; ++i)
                if (group[i] == g) c.entries[i] = FieldElement{static_cast<std::uint32_t>(rng() % q)};
            cols.push_back(std::move(c));
        }
        const LinearCode code(f, k, std::move(cols));
        SpectrumOptions plain;
        plain.decompose = false;
        const auto expected = brute_force_spectrum(code);
        REQUIRE(std::vector<std::uint64_t>(expected.begin(), expected.end()) == weight_spectrum(code).weights());
        REQUIRE(weight_spectrum(code, plain) == weight_spectrum(code));
    }
}

TEST_CASE("scalar multiples of a message have the same weight") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {3, 4, 5, 7, 9}) {
        const LinearCode c = random_code(rng, q, 3, 20);
        const Field& f = c.field();
        for (int i = 0; i < 30; ++i) {
            std::vector<FieldElement> u(3);
            for (auto& x : u) x = FieldElement{static_cast<std::uint32_t>(rng() % q)};
            const std::uint64_t w = weight_of_message(c, u);
            for (std::uint32_t s = 1; s < q; ++s) {
                std::vector<FieldElement> su(u);
                for (auto& x : su) x = f.mul(FieldElement{s}, x);
                REQUIRE(weight_of_message(c, su) == w);
            }
        }
    }
}

TEST_CASE("parallel enumeration matches the serial result") {
    std::mt19937_64 rng(3);
    const LinearCode c = random_code(rng, 3, 10, 200);
    SpectrumOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 4;
    CHECK(weight_spectrum(c, serial) == weight_spectrum(c, parallel));
}

TEST_CASE("enumeration budget") {
    std::mt19937_64 rng(8);
    const LinearCode c = random_code(rng, 2, 12, 40);
    SpectrumOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(weight_spectrum(c, tight), ResourceLimit);
    CHECK(projective_point_count(3, 3) == 13);
    CHECK(projective_point_count(200, 7) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("projective enumeration visits each line once") {
    auto f = make_field(4);
    std::set<std::vector<FieldElement>> seen;
    for_each_projective_message(*f, 3, [&](std::span<const FieldElement> u) {
        std::size_t lead = 0;
        while (u[lead].value == 0) ++lead;
        CHECK(u[lead] == f->one());
        seen.insert(std::vector<FieldElement>(u.begin(), u.end()));
    });
    CHECK(seen.size() == 21);
}
