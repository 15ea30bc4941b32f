#include "wcount/errors.hpp"
#include "wcount/field.hpp"
#include "wcount/primes.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wcount;

namespace {

// Schoolbook multiplication in GF(p)[X]/(m), independent of the table path.
std::uint32_t naive_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = f.characteristic(), e = f.degree();
    std::vector<std::uint64_t> x(e), y(e), prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) {
        x[i] = a % p;
        y[i] = b % p;
    }
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    const auto& m = f.modulus();
    for (std::uint32_t d = 2 * e - 1; d >= e; --d) {
        const std::uint64_t lead = prod[d];
        for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + p * p - lead * m[i] % p) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = e; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
    return out;
}

}  // namespace

TEST_CASE("field_make picks the prime-power decomposition") {
    auto f2 = make_field(2);
    CHECK(f2->characteristic() == 2);
    CHECK(f2->degree() == 1);

    auto f9 = make_field(9);
    CHECK(f9->characteristic() == 3);
    CHECK(f9->degree() == 2);
    const auto& m = f9->modulus();
    REQUIRE(m.size() == 3);
    CHECK(m[2] == 1);
    // A quadratic is irreducible over GF(3) iff none of the three elements is a root.
    for (std::uint32_t x = 0; x < 3; ++x) CHECK((m[0] + m[1] * x + x * x) % 3 != 0);
    // Smallest in lexicographic order is X^2 + 1.
    CHECK(m == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(make_field(6), NotAPrimePower);
    CHECK_THROWS_AS(make_field(1), NotAPrimePower);
    CHECK_THROWS_AS(make_field(0), NotAPrimePower);
    CHECK_THROWS_AS(make_field(12), NotAPrimePower);
    CHECK_THROWS_AS(make_field(kMaxFieldOrder * 2), OutOfRange);
}

TEST_CASE("field_ops small examples") {
    auto f3 = make_field(3);
    CHECK(f3->add(FieldElement{2}, FieldElement{2}) == FieldElement{1});

    auto f4 = make_field(4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const FieldElement X{2};
    CHECK(f4->mul(X, X) == FieldElement{3});  // X^2 = X + 1

    for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 16, 27, 49, 256, 65536, 131072}) {
        auto f = make_field(q);
        CHECK(f->inv(f->one()) == f->one());
        CHECK_THROWS_AS(f->inv(f->zero()), DivisionByZero);
    }
    CHECK_THROWS_AS(f4->element(4), OutOfRange);
    CHECK_THROWS_AS(f4->from_coeffs(std::vector<std::uint32_t>{1}), DimensionMismatch);
    CHECK(f4->coeffs(FieldElement{3}) == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("primitive_element examples") {
    CHECK(make_field(3)->primitive_element() == FieldElement{2});
    CHECK(make_field(5)->primitive_element() == FieldElement{2});
    CHECK(make_field(7)->primitive_element() == FieldElement{3});
    CHECK(make_field(4)->primitive_element() == FieldElement{2});
}

TEST_CASE("table multiplication agrees with schoolbook polynomial arithmetic") {
    for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 243}) {
        auto f = make_field(q);
        for (std::uint32_t a = 0; a < q; a += 1 + q / 40)
            for (std::uint32_t b = 0; b < q; b += 1 + q / 37)
                REQUIRE(f->mul(FieldElement{a}, FieldElement{b}).value == naive_mul(*f, a, b));
    }
}

TEST_CASE("field axioms and primitive order for every prime power up to 2^12") {
    std::mt19937_64 rng(12345);
    int fields = 0;
    for (std::uint64_t q = 2; q <= 4096; ++q) {
        if (!is_prime_power(q)) continue;
        ++fields;
        auto f = make_field(q);
        REQUIRE(f->order() == q);
        REQUIRE(is_irreducible(f->modulus(), f->characteristic()));
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
        for (int i = 0; i < 1000; ++i) {
            const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->add(a, b) == f->add(b, a));
            REQUIRE(f->mul(a, b) == f->mul(b, a));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            REQUIRE(f->sub(f->add(a, b), b) == a);
            if (a.value) REQUIRE(f->mul(a, f->inv(a)) == f->one());
        }
        // Order by walking the powers, independent of the divisor test.
        const FieldElement w = f->primitive_element();
        FieldElement x = w;
        std::uint64_t order = 1;
        while (x != f->one()) {
            x = f->mul(x, w);
            ++order;
        }
        REQUIRE(order == q - 1);
    }
    // 564 primes plus 40 higher prime powers below 4096.
    CHECK(fields == 604);
}

TEST_CASE("direct arithmetic above the table threshold") {
    std::mt19937_64 rng(7);
    for (std::uint64_t q : {131072u, 177147u, 1u << 20}) {
        auto f = make_field(q);
        std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(q - 1));
        for (int i = 0; i < 200; ++i) {
            const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            REQUIRE(f->mul(a, f->inv(a)) == f->one());
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
        const FieldElement w = f->primitive_element();
        CHECK(f->pow(w, q - 1) == f->one());
        CHECK(f->multiplicative_order(w) == q - 1);
    }
}

TEST_CASE("prime power utilities") {
    CHECK(pp(6) == 7);
    CHECK(pp(8) == 8);
    CHECK(pp(1) == 2);
    CHECK(pp(2) == 2);
    CHECK(pp(24) == 25);
    CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK_FALSE(is_prime_power(1));
    CHECK(is_prime_power(1024));
    CHECK_FALSE(is_prime_power(1000));

    const PrimePowerSieve sieve(20000);
    for (std::uint32_t t = 1; t <= 20000; ++t) {
        REQUIRE(sieve.pp(t) == pp(t));
        REQUIRE(sieve.is_prime_power(t) == is_prime_power(t));
        REQUIRE(sieve.pp(t) >= t);
        REQUIRE(sieve.pp(t) <= 2ull * t);
        REQUIRE(static_cast<double>(sieve.pp(t)) <= t + std::ceil(std::pow(t, 0.525)) + 1);
    }
    CHECK_THROWS_AS(sieve.pp(20001), OutOfRange);
}
