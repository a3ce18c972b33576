#pragma once

#include <cstdint>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/detail/bit_table.hpp"
#include "sgame/error.hpp"

namespace sgame {

namespace detail {

// Indicator over all 2^n masks of "is a superset of some family member".
inline bit_table superset_indicator(const coalition_family& family) {
    bit_table t(family.players());
    for (coalition c : family.members()) t.set(c.bits());
    t.close_upward();
    return t;
}

// Indicator over all 2^n masks of "is a subset of some family member".
inline bit_table subset_indicator(const coalition_family& family) {
    bit_table t(family.players());
    for (coalition c : family.members()) t.set(c.bits());
    t.close_downward();
    return t;
}

inline coalition_family collect(int n, const bit_table& t) {
    std::vector<coalition> out;
    out.reserve(t.count());
    for (std::uint64_t x = 0; x < t.size(); ++x) {
        if (t.test(x)) out.emplace_back(x);
    }
    return coalition_family(n, std::move(out));
}

// One-element removals of every member: the union of the families
// {S \ {i} : i in S}. Every maximal losing coalition of a winning-form
// game shows up here.
inline coalition_family one_element_removals(const coalition_family& family) {
    std::vector<coalition> out;
    for (coalition c : family.members()) {
        for (int i : c.players()) out.push_back(c.without(i));
    }
    return coalition_family(family.players(), std::move(out));
}

// One-element extensions of every member; dual to the above for
// losing-form inputs.
inline coalition_family one_element_extensions(const coalition_family& family) {
    const int n = family.players();
    std::vector<coalition> out;
    for (coalition c : family.members()) {
        for (int i = 1; i <= n; ++i) {
            if (!c.contains(i)) out.push_back(c.with(i));
        }
    }
    return coalition_family(n, std::move(out));
}

}  // namespace detail

// Minimal winning family of a validated game. Polynomial from the
// winning, losing, and minimal winning forms; full 2^n enumeration
// (guarded) from the maximal losing form.
inline coalition_family minimal_winning_of(const explicit_game& game) {
    require_valid(game, "minimal_winning_of");
    switch (game.form) {
        case game_form::winning:
            return minimize(game.family);
        case game_form::min_winning:
            return game.family;
        case game_form::losing: {
            // Extend each losing coalition by one player; the extensions
            // that are not losing are winning and contain every minimal
            // winning coalition.
            const coalition_family candidates = detail::one_element_extensions(game.family);
            return minimize(family_difference(candidates, game.family));
        }
        case game_form::max_losing: {
            require_enumerable(game.n, "minimal_winning_of(max_losing)");
            const detail::bit_table losing = detail::subset_indicator(game.family);
            std::vector<coalition> out;
            for (std::uint64_t x = 0; x < losing.size(); ++x) {
                if (losing.test(x)) continue;  // x is losing
                bool minimal = true;
                for (std::uint64_t m = x; m != 0 && minimal; m &= m - 1) {
                    const std::uint64_t below = x ^ (m & (~m + 1));
                    if (!losing.test(below)) minimal = false;
                }
                if (minimal) out.emplace_back(x);
            }
            return coalition_family(game.n, std::move(out));
        }
    }
    throw std::invalid_argument("minimal_winning_of: unknown form");
}

// Maximal losing family of a validated game; mirror dispatch.
inline coalition_family maximal_losing_of(const explicit_game& game) {
    require_valid(game, "maximal_losing_of");
    switch (game.form) {
        case game_form::winning: {
            const coalition_family candidates = detail::one_element_removals(game.family);
            return maximize(family_difference(candidates, game.family));
        }
        case game_form::losing:
            return maximize(game.family);
        case game_form::max_losing:
            return game.family;
        case game_form::min_winning: {
            require_enumerable(game.n, "maximal_losing_of(min_winning)");
            const detail::bit_table winning = detail::superset_indicator(game.family);
            const std::uint64_t full = grand_coalition(game.n).bits();
            std::vector<coalition> out;
            for (std::uint64_t x = 0; x < winning.size(); ++x) {
                if (winning.test(x)) continue;  // x is winning
                bool maximal = true;
                for (std::uint64_t m = full & ~x; m != 0 && maximal; m &= m - 1) {
                    const std::uint64_t above = x | (m & (~m + 1));
                    if (!winning.test(above)) maximal = false;
                }
                if (maximal) out.emplace_back(x);
            }
            return coalition_family(game.n, std::move(out));
        }
    }
    throw std::invalid_argument("maximal_losing_of: unknown form");
}

// Full winning family; exponential-size output in general, so every
// non-identity path is guarded.
inline coalition_family winning_of(const explicit_game& game) {
    require_valid(game, "winning_of");
    switch (game.form) {
        case game_form::winning:
            return game.family;
        case game_form::min_winning: {
            require_enumerable(game.n, "winning_of(min_winning)");
            return detail::collect(game.n, detail::superset_indicator(game.family));
        }
        case game_form::losing: {
            require_enumerable(game.n, "winning_of(losing)");
            detail::bit_table t(game.n);
            for (coalition c : game.family.members()) t.set(c.bits());
            t.flip();
            return detail::collect(game.n, t);
        }
        case game_form::max_losing: {
            require_enumerable(game.n, "winning_of(max_losing)");
            detail::bit_table t = detail::subset_indicator(game.family);
            t.flip();
            return detail::collect(game.n, t);
        }
    }
    throw std::invalid_argument("winning_of: unknown form");
}

// Full losing family; mirror of winning_of.
inline coalition_family losing_of(const explicit_game& game) {
    require_valid(game, "losing_of");
    switch (game.form) {
        case game_form::losing:
            return game.family;
        case game_form::max_losing: {
            require_enumerable(game.n, "losing_of(max_losing)");
            return detail::collect(game.n, detail::subset_indicator(game.family));
        }
        case game_form::winning: {
            require_enumerable(game.n, "losing_of(winning)");
            detail::bit_table t(game.n);
            for (coalition c : game.family.members()) t.set(c.bits());
            t.flip();
            return detail::collect(game.n, t);
        }
        case game_form::min_winning: {
            require_enumerable(game.n, "losing_of(min_winning)");
            detail::bit_table t = detail::superset_indicator(game.family);
            t.flip();
            return detail::collect(game.n, t);
        }
    }
    throw std::invalid_argument("losing_of: unknown form");
}

// The dual game (a coalition wins in the dual iff its complement loses
// in the original), computed form-to-form without expansion: each form
// maps to its opposite with all members complemented.
inline explicit_game dual_of(const explicit_game& game) {
    require_valid(game, "dual_of");
    game_form target{};
    switch (game.form) {
        case game_form::winning: target = game_form::losing; break;
        case game_form::losing: target = game_form::winning; break;
        case game_form::min_winning: target = game_form::max_losing; break;
        case game_form::max_losing: target = game_form::min_winning; break;
    }
    return explicit_game(game.n, target, complement_members(game.family));
}

}  // namespace sgame
