#include <catch2/catch_amalgamated.hpp>

#include "sgame/convert.hpp"
#include "sgame/recognize.hpp"

using namespace sgame;

namespace {

const coalition_family pair_family = coalition_family::of(4, {{1, 2}, {3, 4}});
const coalition_family majority3 = coalition_family::of(3, {{1, 2}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("strongness on the maximal losing form scans pairs") {
    const explicit_game game(4, game_form::max_losing,
                             coalition_family::of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    const verdict v = is_strong(game);
    CHECK(!v.value);
    REQUIRE(v.witness.size() == 2);
    CHECK(v.witness[0].union_with(v.witness[1]) == grand_coalition(4));
    CHECK(v.witness[0] == coalition::of({1, 3}));
    CHECK(v.witness[1] == coalition::of({2, 4}));
}

TEST_CASE("strongness on compact winning forms") {
    CHECK(is_strong(explicit_game(3, game_form::min_winning, majority3)).value);
    CHECK(is_strong(explicit_game(3, game_form::min_winning, coalition_family::of(3, {{1}})))
              .value);
    const verdict weak = is_strong(explicit_game(4, game_form::min_winning, pair_family));
    CHECK(!weak.value);
    CHECK(weak.method == "max-losing-pair-scan+exp-conversion");
}

TEST_CASE("strongness on the losing form lifts witnesses to maximal losers") {
    const explicit_game pair_losing(4, game_form::losing,
                                    losing_of(explicit_game(4, game_form::min_winning,
                                                            pair_family)));
    const verdict v = is_strong(pair_losing);
    CHECK(!v.value);
    REQUIRE(v.witness.size() == 2);
    const coalition_family max_losing = maximize(pair_losing.family);
    CHECK(max_losing.contains(v.witness[0]));
    CHECK(max_losing.contains(v.witness[1]));
    CHECK(v.witness[0].union_with(v.witness[1]) == grand_coalition(4));
}

TEST_CASE("properness on the minimal winning form scans pairs") {
    const verdict v = is_proper(explicit_game(4, game_form::min_winning, pair_family));
    CHECK(!v.value);
    REQUIRE(v.witness.size() == 2);
    CHECK(v.witness[0] == coalition::of({1, 2}));
    CHECK(v.witness[1] == coalition::of({3, 4}));
    CHECK(!v.witness[0].intersects(v.witness[1]));

    CHECK(is_proper(explicit_game(3, game_form::min_winning, majority3)).value);
    CHECK(is_proper(explicit_game(2, game_form::min_winning, coalition_family::of(2, {{1, 2}})))
              .value);
}

TEST_CASE("properness on the losing form counts complementary pairs") {
    const explicit_game pair_losing(4, game_form::losing,
                                    losing_of(explicit_game(4, game_form::min_winning,
                                                            pair_family)));
    const verdict v = is_proper(pair_losing);
    CHECK(!v.value);
    REQUIRE(v.witness.size() == 2);
    CHECK(!v.witness[0].intersects(v.witness[1]));
    CHECK(pair_family.contains(v.witness[0]));
    CHECK(pair_family.contains(v.witness[1]));

    const explicit_game maj_losing(3, game_form::losing,
                                   losing_of(explicit_game(3, game_form::min_winning, majority3)));
    CHECK(is_proper(maj_losing).value);
    CHECK(is_proper(maj_losing).method == "losing-pair-coverage");
}

TEST_CASE("properness on the maximal losing form converts first") {
    const explicit_game game(4, game_form::max_losing, pair_family);
    // winning sets are those not inside {1,2} or {3,4}; both {1,3} and
    // {2,4} win, so the game is improper
    const verdict v = is_proper(game);
    CHECK(!v.value);
    CHECK(v.method == "min-winning-pair-scan+exp-conversion");
}

TEST_CASE("decisiveness counts winners and requires properness") {
    const explicit_game majority_w(3, game_form::winning,
                                   winning_of(explicit_game(3, game_form::min_winning, majority3)));
    const verdict yes = is_decisive(majority_w);
    CHECK(yes.value);
    CHECK(yes.count == 4u);

    const verdict tiny = is_decisive(
        explicit_game(2, game_form::winning, coalition_family::of(2, {{1, 2}})));
    CHECK(!tiny.value);
    CHECK(tiny.count == 1u);

    const explicit_game pairs_w(4, game_form::winning,
                                winning_of(explicit_game(4, game_form::min_winning, pair_family)));
    CHECK(!is_decisive(pairs_w).value);
    CHECK(is_decisive(pairs_w).count == 7u);

    // the count path also works from the losing side
    const explicit_game majority_l(3, game_form::losing,
                                   losing_of(explicit_game(3, game_form::min_winning, majority3)));
    CHECK(is_decisive(majority_l).value);

    // compact forms expand first
    const verdict compact = is_decisive(explicit_game(3, game_form::min_winning, majority3));
    CHECK(compact.value);
    CHECK(compact.method == "winning-count+proper+exp-conversion");
}

TEST_CASE("winner count alone does not settle decisiveness") {
    // eight winners out of sixteen, yet {1,2} and {3,4} win together
    // while {1,3} and {2,4} lose together
    std::vector<coalition> winners;
    for (std::uint64_t x = 0; x < 16; ++x) {
        const coalition c(x);
        const bool has12 = coalition::of({1, 2}).subset_of(c);
        const bool has34 = coalition::of({3, 4}).subset_of(c);
        if (has12 || has34) winners.push_back(c);
    }
    // add one winner from a complementary pair to reach 2^(n-1)
    winners.push_back(coalition::of({1, 3}));
    const coalition_family family(4, winners);
    REQUIRE(family.size() == 8);
    const explicit_game game(4, game_form::winning, family);
    REQUIRE(validate_form(game));
    const verdict v = is_decisive(game);
    CHECK(v.count == 8u);
    CHECK(!v.value);  // improper: {1,2} and {3,4} both win
}

TEST_CASE("majority = decisive + weighted") {
    const explicit_game majority_w(3, game_form::winning,
                                   winning_of(explicit_game(3, game_form::min_winning, majority3)));
    CHECK(is_majority(majority_w).value);

    const explicit_game pairs_w(4, game_form::winning,
                                winning_of(explicit_game(4, game_form::min_winning, pair_family)));
    CHECK(!is_majority(pairs_w).value);

    CHECK(is_majority(explicit_game(1, game_form::winning, coalition_family::of(1, {{1}}))).value);
}

TEST_CASE("recognizers reject invalid games") {
    const explicit_game bad(2, game_form::winning, coalition_family::of(2, {{1}}));
    CHECK_THROWS_AS(is_strong(bad), invalid_game_error);
    CHECK_THROWS_AS(is_proper(bad), invalid_game_error);
    CHECK_THROWS_AS(is_decisive(bad), invalid_game_error);
}
