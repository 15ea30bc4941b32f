#include "wcount/bounds.hpp"
#include "wcount/constructions.hpp"
#include "wcount/errors.hpp"
#include "wcount/primes.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace wcount;

namespace {

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

}  // namespace

TEST_CASE("binary_full_spectrum examples") {
    const LinearCode c1 = binary_full_spectrum(1);
    CHECK(c1.length() == 1);
    CHECK(weight_spectrum(c1).weights() == range(1, 1));

    const LinearCode c2 = binary_full_spectrum(2);
    CHECK(c2.length() == 3);
    CHECK(c2.dimension() == 2);
    CHECK(weight_spectrum(c2).weights() == range(1, 3));

    const LinearCode c4 = binary_full_spectrum(4);
    CHECK(c4.length() == 15);
    CHECK(weight_spectrum(c4).weights() == range(1, 15));
    CHECK(BigInt(weight_spectrum(c4).size()) == upper_prop2(4, 2));

    CHECK_THROWS_AS(binary_full_spectrum(0), OutOfRange);
    CHECK_THROWS_AS(binary_full_spectrum(21), OutOfRange);
    CHECK(binary_full_spectrum(21, 30).length() == (1u << 21) - 1);
}

TEST_CASE("binary_full_spectrum rows are nested runs of ones") {
    const LinearCode c = binary_full_spectrum(3);
    // Row j (1 = top) starts with 2^(k-j+1) - 1 ones: weights of the unit messages.
    const std::uint64_t expected[] = {7, 3, 1};
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<FieldElement> u(3, FieldElement{0});
        u[j] = FieldElement{1};
        CHECK(weight_of_message(c, u) == expected[j]);
    }
}

TEST_CASE("binary_full_spectrum: message to weight is a bijection onto 1..2^k-1") {
    for (std::size_t k = 1; k <= 10; ++k) {
        const LinearCode c = binary_full_spectrum(k);
        std::set<std::uint64_t> seen;
        for (std::uint64_t m = 1; m < (1u << k); ++m) {
            std::vector<FieldElement> u(k);
            for (std::size_t i = 0; i < k; ++i) u[i] = FieldElement{static_cast<std::uint32_t>((m >> i) & 1)};
            const std::uint64_t w = weight_of_message(c, u);
            REQUIRE(w >= 1);
            REQUIRE(w <= (1u << k) - 1);
            REQUIRE(seen.insert(w).second);
        }
    }
}

TEST_CASE("binary saturation up to k = 16") {
    for (std::size_t k = 1; k <= 16; ++k) {
        const LinearCode c = binary_full_spectrum(k);
        REQUIRE(BigInt(num_distinct_weights(c)) == upper_prop2(k, 2));
        REQUIRE(rank(c) == k);
    }
}

TEST_CASE("two_dim_full examples") {
    const LinearCode c2 = two_dim_full(2);
    CHECK(c2.length() == 6);
    CHECK(weight_spectrum(c2).weights() == std::vector<std::uint64_t>{3, 4, 5});

    const LinearCode c3 = two_dim_full(3);
    CHECK(c3.length() == 10);
    CHECK(weight_spectrum(c3).weights() == std::vector<std::uint64_t>{6, 7, 8, 9});

    CHECK_THROWS_AS(two_dim_full(3, 2), PreconditionViolated);
    CHECK_THROWS_AS(two_dim_full(3, 4, 4), PreconditionViolated);
    CHECK_THROWS_AS(two_dim_full(6), NotAPrimePower);
}

TEST_CASE("two_dim_full saturates (q^2-1)/(q-1) = q+1 for every prime power q <= 64") {
    for (std::uint64_t q = 2; q <= 64; ++q) {
        if (!is_prime_power(q)) continue;
        const LinearCode c = two_dim_full(q);
        const std::uint64_t overlap = q * (q - 1) / 2;
        REQUIRE(c.length() == overlap + 2 * q + 1);
        std::set<std::uint64_t> expected{q + overlap, q + 1 + overlap};
        for (std::uint64_t i = 1; i <= q - 1; ++i) expected.insert(q + (q + 1) + overlap - i);
        const auto spectrum = weight_spectrum(c);
        REQUIRE(std::vector<std::uint64_t>(expected.begin(), expected.end()) == spectrum.weights());
        REQUIRE(spectrum.size() == q + 1);
    }
}

TEST_CASE("two_dim_full with enlarged a and b") {
    const std::uint64_t q = 4, a = 7, b = 12, overlap = 6;
    const LinearCode c = two_dim_full(q, a, b);
    CHECK(c.length() == a + b + overlap);
    std::set<std::uint64_t> expected{a + overlap, b + overlap};
    for (std::uint64_t i = 1; i <= q - 1; ++i) expected.insert(a + b + overlap - i);
    CHECK(std::vector<std::uint64_t>(expected.begin(), expected.end()) == weight_spectrum(c).weights());
}

TEST_CASE("doubling_step examples") {
    const LinearCode d1 = doubling_step(binary_full_spectrum(2), 4);
    CHECK(d1.dimension() == 3);
    CHECK(weight_spectrum(d1).weights() == range(1, 7));
    CHECK(weight_spectrum(d1) == weight_spectrum(binary_full_spectrum(3)));

    const LinearCode d2 = doubling_step(two_dim_full(3), 10);
    CHECK(weight_spectrum(d2).weights() == std::vector<std::uint64_t>{6, 7, 8, 9, 10, 16, 17, 18, 19});
    SpectrumOptions plain;
    plain.decompose = false;
    CHECK(weight_spectrum(d2, plain) == weight_spectrum(d2));

    auto f2 = make_field(2);
    const LinearCode rep(f2, 1, {{{FieldElement{1}}, 5}});
    CHECK_THROWS_AS(doubling_step(rep, 5), PreconditionViolated);
    CHECK(weight_spectrum(doubling_step(rep)).weights() == std::vector<std::uint64_t>{5, 6, 11});

    auto f3 = make_field(3);
    const LinearCode deficient(f3, 2, {{{FieldElement{1}, FieldElement{1}}, 1}, {{FieldElement{2}, FieldElement{2}}, 1}});
    CHECK_THROWS_AS(doubling_step(deficient), RankDeficient);
}

TEST_CASE("doubling law on random full-rank codes") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 60) {
        const std::uint64_t qs[] = {2, 3, 4, 5};
        const std::uint64_t q = qs[rng() % 4];
        const std::size_t k = 1 + rng() % 3, n = k + rng() % 20;
        auto f = make_field(q);
        std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(n));
        for (auto& r : rows)
            for (auto& x : r) x = FieldElement{static_cast<std::uint32_t>(rng() % q)};
        const LinearCode c = LinearCode::from_rows(f, rows);
        if (rank(c) < k) continue;
        const auto before = weight_spectrum(c);
        const std::uint64_t t = before.max() + 1 + rng() % 5;
        const LinearCode d = doubling_step(c, t);
        const auto after = weight_spectrum(d);
        REQUIRE(d.dimension() == k + 1);
        REQUIRE(d.length() == c.length() + t);
        REQUIRE(after.size() == 2 * before.size() + 1);
        std::set<std::uint64_t> expected(before.weights().begin(), before.weights().end());
        expected.insert(t);
        for (auto w : before.weights()) expected.insert(t + w);
        REQUIRE(std::vector<std::uint64_t>(expected.begin(), expected.end()) == after.weights());
        ++checked;
    }
}

TEST_CASE("iterated_doubling examples") {
    CHECK(num_distinct_weights(iterated_doubling(2, 3)) == 4);
    const LinearCode c33 = iterated_doubling(3, 3);
    CHECK(c33.dimension() == 3);
    CHECK(num_distinct_weights(c33) == 9);
    CHECK(BigInt(9) >= prop4_formula(3, 3));
    const LinearCode c45 = iterated_doubling(4, 5);
    CHECK(num_distinct_weights(c45) == 27);
    CHECK(prop4_formula(4, 5) == 25);
    CHECK(iterated_doubling_weight_count(4, 5) == 27);
    CHECK_THROWS_AS(iterated_doubling(1, 3), OutOfRange);

    // Same count by plain enumeration, without the block decomposition.
    SpectrumOptions plain;
    plain.decompose = false;
    CHECK(num_distinct_weights(iterated_doubling(4, 3), plain) == iterated_doubling_weight_count(4, 3));
}

TEST_CASE("ambient_code examples") {
    CHECK(weight_spectrum(ambient_code(1, 2)).weights() == range(1, 1));
    CHECK(weight_spectrum(ambient_code(4, 3)).weights() == range(1, 4));
    CHECK(weight_spectrum(ambient_code(3, 9)).weights() == range(1, 3));
    CHECK_THROWS_AS(ambient_code(0, 2), OutOfRange);
}

TEST_CASE("constructed lower bounds are monotone in k and in the field") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        std::uint64_t prev = 0;
        for (std::size_t k = 2; k <= 7; ++k) {
            const std::uint64_t count = num_distinct_weights(iterated_doubling(k, q));
            REQUIRE(count >= prev);
            REQUIRE(count == iterated_doubling_weight_count(k, q));
            prev = count;
        }
    }
    const std::pair<std::uint64_t, std::uint64_t> towers[] = {{2, 4}, {2, 8}, {3, 9}, {2, 16}, {4, 16}, {3, 27}};
    for (auto [q, qm] : towers) CHECK(num_distinct_weights(two_dim_full(qm)) >= num_distinct_weights(two_dim_full(q)));
}
