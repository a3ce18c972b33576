#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/convert.hpp"
#include "sgame/verdict.hpp"
#include "sgame/weighted.hpp"

namespace sgame {

namespace detail {

// First pair (in canonical order) of maximal losing coalitions whose
// union is the grand coalition; such a pair exists iff the game is weak.
inline verdict strong_from_max_losing(const coalition_family& max_losing, std::string method) {
    const coalition all = grand_coalition(max_losing.players());
    const auto& m = max_losing.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (m[i].union_with(m[j]) == all)
                return verdict{.value = false,
                               .witness = {m[i], m[j]},
                               .count = std::nullopt,
                               .method = std::move(method)};
        }
    }
    return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = std::move(method)};
}

// First pair of disjoint minimal winning coalitions; exists iff improper.
inline verdict proper_from_min_winning(const coalition_family& min_winning, std::string method) {
    const auto& m = min_winning.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!m[i].intersects(m[j]))
                return verdict{.value = false,
                               .witness = {m[i], m[j]},
                               .count = std::nullopt,
                               .method = std::move(method)};
        }
    }
    return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = std::move(method)};
}

// First family member containing c, in canonical order.
inline coalition first_member_above(const coalition_family& family, coalition c) {
    for (coalition m : family.members()) {
        if (c.subset_of(m)) return m;
    }
    throw std::logic_error("first_member_above: no covering member");
}

inline coalition first_member_below(const coalition_family& family, coalition c) {
    for (coalition m : family.members()) {
        if (m.subset_of(c)) return m;
    }
    throw std::logic_error("first_member_below: no contained member");
}

}  // namespace detail

// Strongness: every coalition or its complement wins. The losing and
// maximal losing forms decide directly; the winning form goes through
// the polynomial maximal-losing construction; the minimal winning form
// needs the guarded exponential conversion.
inline verdict is_strong(const explicit_game& game) {
    require_valid(game, "is_strong");
    switch (game.form) {
        case game_form::losing: {
            for (coalition c : game.family.members()) {
                const coalition rest = complement_in(c, game.n);
                if (game.family.contains(rest)) {
                    // lift the witness to maximal losing coalitions
                    const coalition_family max_losing = maximize(game.family);
                    return verdict{.value = false,
                                   .witness = {detail::first_member_above(max_losing, c),
                                               detail::first_member_above(max_losing, rest)},
                                   .count = std::nullopt,
                                   .method = "losing-complement-scan"};
                }
            }
            return verdict{.value = true,
                           .witness = {},
                           .count = std::nullopt,
                           .method = "losing-complement-scan"};
        }
        case game_form::max_losing:
            return detail::strong_from_max_losing(game.family, "max-losing-pair-scan");
        case game_form::winning:
            return detail::strong_from_max_losing(maximal_losing_of(game),
                                                  "max-losing-pair-scan+poly-conversion");
        case game_form::min_winning:
            return detail::strong_from_max_losing(maximal_losing_of(game),
                                                  "max-losing-pair-scan+exp-conversion");
    }
    throw std::invalid_argument("is_strong: unknown form");
}

// Properness: no coalition wins together with its complement. For the
// losing form the winners are implicit, so the scan counts how many of
// the 2^(n-1) complementary pairs have a losing side; any uncovered
// pair is a double win. Among the first |L|+1 pair representatives at
// least one is uncovered, so the witness search stays polynomial.
inline verdict is_proper(const explicit_game& game) {
    require_valid(game, "is_proper");
    switch (game.form) {
        case game_form::winning: {
            for (coalition c : game.family.members()) {
                const coalition rest = complement_in(c, game.n);
                if (game.family.contains(rest)) {
                    const coalition_family min_winning = minimize(game.family);
                    return verdict{.value = false,
                                   .witness = {detail::first_member_below(min_winning, c),
                                               detail::first_member_below(min_winning, rest)},
                                   .count = std::nullopt,
                                   .method = "winning-complement-scan"};
                }
            }
            return verdict{.value = true,
                           .witness = {},
                           .count = std::nullopt,
                           .method = "winning-complement-scan"};
        }
        case game_form::min_winning:
            return detail::proper_from_min_winning(game.family, "min-winning-pair-scan");
        case game_form::losing: {
            const std::uint64_t full = grand_coalition(game.n).bits();
            std::unordered_set<std::uint64_t> covered;
            for (coalition c : game.family.members())
                covered.insert(std::min(c.bits(), full & ~c.bits()));
            const std::uint64_t pairs = std::uint64_t{1} << (game.n - 1);
            if (covered.size() == pairs)
                return verdict{.value = true,
                               .witness = {},
                               .count = std::nullopt,
                               .method = "losing-pair-coverage"};
            // some representative below |L|+1 is uncovered
            coalition winner;
            for (std::uint64_t x = 0; x < pairs; ++x) {
                if (!covered.contains(x)) {
                    winner = coalition(x);
                    break;
                }
            }
            const coalition rest = complement_in(winner, game.n);
            const coalition_family min_winning = minimal_winning_of(game);
            return verdict{.value = false,
                           .witness = {detail::first_member_below(min_winning, winner),
                                       detail::first_member_below(min_winning, rest)},
                           .count = std::nullopt,
                           .method = "losing-pair-coverage"};
        }
        case game_form::max_losing:
            return detail::proper_from_min_winning(minimal_winning_of(game),
                                                   "min-winning-pair-scan+exp-conversion");
    }
    throw std::invalid_argument("is_proper: unknown form");
}

// Decisive = proper and strong. With the winning count in hand this
// reduces to |W| = 2^(n-1) plus properness: a proper game with exactly
// one winner forced into each complementary pair is strong as well.
// The count alone is not sufficient. Compact forms expand first
// (guarded).
inline verdict is_decisive(const explicit_game& game) {
    require_valid(game, "is_decisive");
    if (game.form == game_form::min_winning || game.form == game_form::max_losing) {
        explicit_game expanded(game.n, game_form::winning, winning_of(game));
        verdict v = is_decisive(expanded);
        v.method += "+exp-conversion";
        return v;
    }
    // both full forms split 2^n coalitions, so |W| = 2^(n-1) iff the
    // listed family has exactly that size
    const std::uint64_t half = std::uint64_t{1} << (game.n - 1);
    const std::uint64_t winners = game.form == game_form::winning
                                      ? game.family.size()
                                      : (half << 1) - game.family.size();
    if (game.family.size() != half)
        return verdict{.value = false,
                       .witness = {},
                       .count = winners,
                       .method = "winning-count+proper"};
    verdict proper = is_proper(game);
    return verdict{.value = proper.value,
                   .witness = std::move(proper.witness),
                   .count = winners,
                   .method = "winning-count+proper"};
}

// Majority = decisive and weighted.
inline verdict is_majority(const explicit_game& game) {
    verdict decisive = is_decisive(game);
    if (!decisive.value) {
        decisive.method += "+not-decisive";
        return decisive;
    }
    weightedness_report weighted = analyze_weighted(game);
    return verdict{.value = weighted.realization.has_value(),
                   .witness = {},
                   .count = decisive.count,
                   .method = "decisive+" + weighted.method};
}

}  // namespace sgame
