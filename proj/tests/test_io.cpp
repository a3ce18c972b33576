#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sgame/json_io.hpp"

using namespace sgame;

TEST_CASE("game files round trip") {
    const explicit_game game(4, game_form::min_winning,
                             coalition_family::of(4, {{1, 2}, {3, 4}}));
    const ordered_json j = game_to_json(game);
    CHECK(j.dump() == R"({"n":4,"form":"min_winning","coalitions":[[1,2],[3,4]]})");
    const explicit_game back = game_from_json(json::parse(j.dump()));
    CHECK(back.n == game.n);
    CHECK(back.form == game.form);
    CHECK(back.family == game.family);
}

TEST_CASE("game parsing accepts unsorted members and rejects junk") {
    const explicit_game g =
        game_from_json(json::parse(R"({"n":3,"form":"winning","coalitions":[[3,1,2],[2,1]]})"));
    CHECK(g.family == coalition_family::of(3, {{1, 2}, {1, 2, 3}}));

    CHECK_THROWS_AS(game_from_json(json::parse(R"({"n":3,"form":"sideways","coalitions":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(game_from_json(json::parse(R"({"n":3,"coalitions":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(game_from_json(json::parse(R"({"n":2,"form":"winning","coalitions":[[5]]})")),
                    std::invalid_argument);
}

TEST_CASE("realization files round trip") {
    const weighted_realization r(3, {1, 1, 2});
    const ordered_json j = realization_to_json(r);
    CHECK(j.dump() == R"({"quota":3,"weights":[1,1,2]})");
    CHECK(realization_from_json(json::parse(j.dump())) == r);
    CHECK_THROWS_AS(realization_from_json(json::parse(R"({"quota":9,"weights":[1,1]})")),
                    std::invalid_argument);
}

TEST_CASE("formula wire format round trips") {
    const json wire = json::parse(R"(["or",["and",1,2],["and",3,4]])");
    const formula phi = formula_from_json(wire);
    CHECK(formula_to_json(phi).dump() == wire.dump());
    CHECK(evaluate(phi, assignment{4, 0b0011}));
    CHECK(!evaluate(phi, assignment{4, 0b0110}));

    std::mt19937_64 rng(20241020);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(testutil::draw(rng, 1, 6));
        const formula random = testutil::random_formula(rng, n, 3);
        const formula back = formula_from_json(json::parse(formula_to_json(random).dump()));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
            REQUIRE(evaluate(back, assignment{n, x}) == evaluate(random, assignment{n, x}));
    }
}

TEST_CASE("formula parsing rejects malformed nodes") {
    CHECK_THROWS_AS(formula_from_json(json::parse(R"(["nand",1,2])")), std::invalid_argument);
    CHECK_THROWS_AS(formula_from_json(json::parse(R"(["not",1,2])")), std::invalid_argument);
    CHECK_THROWS_AS(formula_from_json(json::parse(R"(["true",1])")), std::invalid_argument);
    CHECK_THROWS_AS(formula_from_json(json::parse(R"(-2)")), std::invalid_argument);
    CHECK_THROWS_AS(formula_from_json(json::parse(R"("x1")")), std::invalid_argument);
}

TEST_CASE("succinct files parse") {
    const succinct_file file = succinct_from_json(
        json::parse(R"({"n":4,"form":"winning","formula":["or",["and",1,2],["and",3,4]]})"));
    CHECK(file.n == 4);
    CHECK(file.form == game_form::winning);
    CHECK(validate_succinct(file.n, file.form, file.phi).value);
}

TEST_CASE("rationals serialize as fraction strings") {
    CHECK(rational_to_string(rational(3)) == "3");
    CHECK(rational_to_string(rational(1, 3)) == "1/3");
    CHECK(rational_to_string(rational(-7, 2)) == "-7/2");
}
