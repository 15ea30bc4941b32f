#include "wcount/constructions.hpp"
#include "wcount/errors.hpp"
#include "wcount/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace wcount;

TEST_CASE("linear code json layout") {
    const Json j = to_json(two_dim_full(2));
    CHECK(j["q"] == 2);
    CHECK(j["k"] == 2);
    CHECK(j["n"] == 6);
    std::uint64_t total = 0;
    for (const auto& col : j["columns"]) {
        REQUIRE(col.size() == 2);
        CHECK(col[0].size() == 2);
        total += col[1].get<std::uint64_t>();
    }
    CHECK(total == 6);
}

TEST_CASE("linear codes round-trip through json text") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t qs[] = {2, 3, 4, 7, 9, 16};
        const std::uint64_t q = qs[rng() % 6];
        const std::size_t k = 1 + rng() % 4, n = 1 + rng() % 12;
        auto f = make_field(q);
        std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(n));
        for (auto& r : rows)
            for (auto& x : r) x = FieldElement{static_cast<std::uint32_t>(rng() % q)};
        const LinearCode c = LinearCode::from_rows(f, rows);
        const LinearCode back = linear_code_from_json(Json::parse(to_json(c).dump()));
        REQUIRE(back.field().order() == q);
        REQUIRE(back.dimension() == k);
        REQUIRE(back.length() == n);
        REQUIRE(std::ranges::equal(back.columns(), c.columns()));
    }
}

TEST_CASE("malformed linear code json is rejected") {
    Json j = to_json(binary_full_spectrum(2));
    j["n"] = 4;
    CHECK_THROWS_AS(linear_code_from_json(j), PreconditionViolated);
    CHECK_THROWS_AS(linear_code_from_json(Json::parse(R"({"q": 2})")), PreconditionViolated);
    CHECK_THROWS_AS(linear_code_from_json(Json::parse(R"({"q": 6, "k": 1, "columns": [[[1], 1]]})")), NotAPrimePower);
    CHECK_THROWS(linear_code_from_json(Json::parse(R"({"q": 2, "k": 2, "columns": [[[1], 1]]})")));
    CHECK_THROWS(linear_code_from_json(Json::parse(R"({"q": 2, "k": 1, "columns": [[[2], 1]]})")));
}

TEST_CASE("unrestricted codes round-trip") {
    const UnrestrictedCode c2 = step_to_code(sidon_chain(5), 2);
    const Json j = to_json(c2);
    CHECK(j["words"][2] == "111000000000");
    CHECK(unrestricted_code_from_json(Json::parse(j.dump())).words() == c2.words());

    const UnrestrictedCode c36(36, {{0, 35, 10}, {1, 2, 3}});
    CHECK(to_json(c36)["words"][0] == "0za");
    CHECK(unrestricted_code_from_json(to_json(c36)).words() == c36.words());

    const UnrestrictedCode c40(40, {{0, 39}, {38, 1}});
    CHECK(to_json(c40)["words"][0].is_array());
    CHECK(unrestricted_code_from_json(to_json(c40)).words() == c40.words());
    CHECK(unrestricted_code_from_json(to_json(c40)).alphabet_size() == 40);
}

TEST_CASE("difference sets and spectra") {
    const DifferenceSet ds = singer_difference_set(3);
    const Json j = to_json(ds);
    CHECK(j["v"] == 13);
    CHECK(difference_set_from_json(j) == ds);
    CHECK(to_json(weight_spectrum(binary_full_spectrum(2))) == Json::parse("[1,2,3]"));
    CHECK(to_json(std::set<std::size_t>{1, 4}) == Json::parse("[1,4]"));
}

TEST_CASE("big integers") {
    CHECK(big_to_json(BigInt(42)) == 42);
    CHECK(big_to_json(upper_prop2(8, 121)) == upper_prop2(8, 121).convert_to<std::uint64_t>());
    const BigInt huge = upper_prop2(40, 121);
    CHECK(big_to_json(huge) == huge.str());
}

TEST_CASE("search reports carry their witness") {
    const SearchReport r = exhaustive_L(3, 2, 2);
    const Json j = to_json(r);
    CHECK(j["best_count"] == 3);
    CHECK(j["params"]["k"] == 2);
    CHECK(num_distinct_weights(linear_code_from_json(j["best_witness"])) == 3);

    const Json jn = to_json(exhaustive_N(3, 3, 2));
    CHECK(jn["params"]["M"] == 3);
    CHECK(distance_spectrum(unrestricted_code_from_json(jn["best_witness"])).size() == 3);
}
