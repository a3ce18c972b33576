#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sgame/convert.hpp"
#include "sgame/error.hpp"
#include "sgame/oracle.hpp"
#include "sgame/recognize.hpp"

using namespace sgame;

namespace {

// The game on 2k players whose minimal winning coalitions are the
// consecutive pairs {2i-1, 2i}; its maximal losing family picks one
// player from every pair, so it has exactly 2^k members.
coalition_family consecutive_pairs(int k) {
    std::vector<coalition> pairs;
    for (int i = 1; i <= k; ++i) pairs.push_back(coalition::of({2 * i - 1, 2 * i}));
    return coalition_family(2 * k, std::move(pairs));
}

}  // namespace

TEST_CASE("minimal winning family per source form") {
    CHECK(minimal_winning_of(explicit_game(2, game_form::winning,
                                           coalition_family::of(2, {{1}, {1, 2}}))) ==
          coalition_family::of(2, {{1}}));
    CHECK(minimal_winning_of(explicit_game(
              4, game_form::max_losing,
              coalition_family::of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}))) ==
          coalition_family::of(4, {{1, 2}, {3, 4}}));
    CHECK(minimal_winning_of(explicit_game(2, game_form::losing,
                                           coalition_family::of(2, {{}, {1}, {2}}))) ==
          coalition_family::of(2, {{1, 2}}));
    const auto idem = coalition_family::of(3, {{1, 2}, {3}});
    CHECK(minimal_winning_of(explicit_game(3, game_form::min_winning, idem)) == idem);
}

TEST_CASE("maximal losing family per source form") {
    CHECK(maximal_losing_of(explicit_game(2, game_form::winning,
                                          coalition_family::of(2, {{1}, {1, 2}}))) ==
          coalition_family::of(2, {{2}}));
    CHECK(maximal_losing_of(explicit_game(4, game_form::min_winning,
                                          coalition_family::of(4, {{1, 2}, {3, 4}}))) ==
          coalition_family::of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(maximal_losing_of(explicit_game(2, game_form::min_winning,
                                          coalition_family::of(2, {{1, 2}}))) ==
          coalition_family::of(2, {{1}, {2}}));
    CHECK(maximal_losing_of(explicit_game(3, game_form::losing,
                                          coalition_family::of(3, {{}, {1}, {2}, {1, 2}}))) ==
          coalition_family::of(3, {{1, 2}}));
}

TEST_CASE("winning family per source form") {
    CHECK(winning_of(explicit_game(3, game_form::min_winning,
                                   coalition_family::of(3, {{1, 2, 3}}))) ==
          coalition_family::of(3, {{1, 2, 3}}));
    CHECK(winning_of(explicit_game(2, game_form::min_winning, coalition_family::of(2, {{1}}))) ==
          coalition_family::of(2, {{1}, {1, 2}}));
    CHECK(winning_of(explicit_game(2, game_form::losing, coalition_family::of(2, {{}, {2}}))) ==
          coalition_family::of(2, {{1}, {1, 2}}));
    CHECK(winning_of(explicit_game(2, game_form::max_losing, coalition_family::of(2, {{2}}))) ==
          coalition_family::of(2, {{1}, {1, 2}}));
}

TEST_CASE("losing family per source form") {
    const auto unanimity2 = explicit_game(2, game_form::winning, coalition_family::of(2, {{1, 2}}));
    CHECK(losing_of(unanimity2) == coalition_family::of(2, {{}, {1}, {2}}));
    CHECK(losing_of(unanimity2).size() == 3);  // 2^2 - 1
    CHECK(losing_of(explicit_game(1, game_form::winning, coalition_family::of(1, {{1}}))) ==
          coalition_family::of(1, {{}}));
    CHECK(losing_of(explicit_game(2, game_form::max_losing, coalition_family::of(2, {{2}}))) ==
          coalition_family::of(2, {{}, {2}}));
}

TEST_CASE("unanimity games lose everywhere but the top") {
    for (int n = 1; n <= 16; ++n) {
        std::vector<coalition> top = {grand_coalition(n)};
        const explicit_game game(n, game_form::winning, coalition_family(n, top));
        CHECK(losing_of(game).size() == (std::uint64_t{1} << n) - 1);
    }
}

TEST_CASE("dual games complement the members and swap forms") {
    const explicit_game pairs(4, game_form::min_winning, coalition_family::of(4, {{1, 2}, {3, 4}}));
    const explicit_game dual = dual_of(pairs);
    CHECK(dual.form == game_form::max_losing);
    CHECK(dual.family == coalition_family::of(4, {{1, 2}, {3, 4}}));

    const explicit_game dictator(3, game_form::min_winning, coalition_family::of(3, {{1}}));
    CHECK(dual_of(dictator).family == coalition_family::of(3, {{2, 3}}));
    CHECK(dual_of(dictator).form == game_form::max_losing);

    const explicit_game win_form(2, game_form::winning, coalition_family::of(2, {{1}, {1, 2}}));
    const explicit_game win_dual = dual_of(win_form);
    CHECK(win_dual.form == game_form::losing);
    CHECK(win_dual.family == coalition_family::of(2, {{}, {2}}));
}

TEST_CASE("dual is an involution") {
    std::mt19937_64 rng(20240910);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(testutil::draw(rng, 1, 10));
        auto family = testutil::random_min_winning_family(rng, n, 5);
        if (family.empty()) continue;
        const explicit_game game(n, game_form::min_winning, family);
        const explicit_game twice = dual_of(dual_of(game));
        CHECK(twice.form == game.form);
        CHECK(twice.family == game.family);
    }
}

TEST_CASE("polynomial maximal-losing construction matches enumeration") {
    std::mt19937_64 rng(20240911);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(testutil::draw(rng, 1, 12));
        auto min_win = testutil::random_min_winning_family(rng, n, 5);
        if (min_win.empty()) continue;
        const explicit_game compact(n, game_form::min_winning, min_win);
        const explicit_game full(n, game_form::winning, winning_of(compact));
        // direct enumeration of the losing side
        std::vector<coalition> losers;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            bool wins = false;
            for (coalition s : min_win.members()) {
                if (s.subset_of(coalition(x))) wins = true;
            }
            if (!wins) losers.emplace_back(x);
        }
        CHECK(maximal_losing_of(full) == maximize(coalition_family(n, losers)));
    }
}

TEST_CASE("round trips reproduce the source family") {
    std::mt19937_64 rng(20240912);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(testutil::draw(rng, 1, 10));
        auto min_win = testutil::random_min_winning_family(rng, n, 4);
        if (min_win.empty()) continue;
        const explicit_game compact(n, game_form::min_winning, min_win);
        const explicit_game full_w(n, game_form::winning, winning_of(compact));
        const explicit_game full_l(n, game_form::losing, losing_of(compact));
        const explicit_game compact_l(n, game_form::max_losing, maximal_losing_of(compact));

        CHECK(minimal_winning_of(full_w) == min_win);
        CHECK(minimal_winning_of(full_l) == min_win);
        CHECK(minimal_winning_of(compact_l) == min_win);
        CHECK(winning_of(full_l) == full_w.family);
        CHECK(losing_of(full_w) == full_l.family);
        CHECK(maximal_losing_of(full_l) == compact_l.family);
        CHECK(winning_of(full_w).size() + losing_of(full_w).size() == (std::uint64_t{1} << n));
    }
}

TEST_CASE("pair games blow up exponentially between compact forms") {
    for (int k = 1; k <= 8; ++k) {
        const explicit_game compact(2 * k, game_form::min_winning, consecutive_pairs(k));
        const coalition_family max_losing = maximal_losing_of(compact);
        CHECK(max_losing.size() == (std::uint64_t{1} << k));
        const explicit_game reverse(2 * k, game_form::max_losing, max_losing);
        CHECK(minimal_winning_of(reverse) == consecutive_pairs(k));
    }
}

TEST_CASE("properness and strongness swap across the dual") {
    for (int n = 1; n <= 4; ++n) {
        for (const explicit_game& game : enumerate_games(n)) {
            const explicit_game dual = dual_of(game);
            CHECK(is_proper(game).value == is_strong(dual).value);
            CHECK(is_strong(game).value == is_proper(dual).value);
        }
    }
}

TEST_CASE("enumeration guard fails fast") {
    const int saved = enumeration_limit();
    set_enumeration_limit(3);
    const explicit_game game(4, game_form::min_winning, coalition_family::of(4, {{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(maximal_losing_of(game), resource_error);
    CHECK_THROWS_AS(winning_of(game), resource_error);
    set_enumeration_limit(saved);
    CHECK_NOTHROW(maximal_losing_of(game));
}

TEST_CASE("conversions reject invalid games") {
    // not an antichain
    const explicit_game bad(3, game_form::min_winning,
                            coalition_family::of(3, {{1}, {1, 2}}));
    CHECK_THROWS_AS(minimal_winning_of(bad), invalid_game_error);
    CHECK_THROWS_AS(dual_of(bad), invalid_game_error);
}
