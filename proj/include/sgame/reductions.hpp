#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/realization.hpp"
#include "sgame/succinct.hpp"

namespace sgame {

// A partition question: can the values be split into two halves of
// equal sum?
struct partition_instance {
    std::vector<long long> values;  // nonnegative
};

enum class partition_variant { strong, proper, majority };

// Maps a partition instance to a weighted realization whose property
// failure mirrors the partition answer: with an even total 2s the
// values become the weights and the quota is s+1 for the strong
// variant (a partition makes both halves lose) or s for the proper and
// majority variants (a partition makes both halves win). Odd totals
// have no partition and map to the fixed game (2; 1,1,1), which is
// strong, proper, and majority.
inline weighted_realization partition_reduction(const partition_instance& inst,
                                                partition_variant variant) {
    for (long long v : inst.values) {
        if (v < 0) throw std::invalid_argument("partition_reduction: negative value");
    }
    const long long total = std::accumulate(inst.values.begin(), inst.values.end(), 0LL);
    if (total % 2 != 0) return weighted_realization(2, {1, 1, 1});
    if (total == 0)
        throw std::invalid_argument(
            "partition_reduction: all-zero values admit no valid quota");
    const long long half = total / 2;
    const long long quota = variant == partition_variant::strong ? half + 1 : half;
    return weighted_realization(quota, inst.values);
}

// A set-splitting question over ground set {1..ground}: is there a
// bipartition such that no collection member lands entirely on one side?
struct set_splitting_instance {
    int ground = 0;
    coalition_family collection;

    set_splitting_instance(int ground_, coalition_family collection_)
        : ground(ground_), collection(std::move(collection_)) {
        if (collection.players() != ground)
            throw std::invalid_argument("set_splitting_instance: ground size mismatch");
        if (collection.contains(coalition{}))
            throw std::invalid_argument("set_splitting_instance: members must be nonempty");
    }
};

// The game whose minimal winning coalitions are the minimized
// collection; a splitting exists exactly when that game is weak (both
// halves of the split lose).
inline explicit_game set_splitting_reduction(const set_splitting_instance& inst) {
    if (inst.collection.empty())
        throw invalid_game_error("set_splitting_reduction: empty collection");
    return explicit_game(inst.ground, game_form::min_winning, minimize(inst.collection));
}

// The dual game, presented in maximal losing form: complements of the
// minimal winning coalitions. The source is weak exactly when the
// result is improper.
inline explicit_game strong_to_proper_reduction(const explicit_game& game) {
    if (game.form != game_form::min_winning)
        throw std::invalid_argument("strong_to_proper_reduction: expects min_winning form");
    require_valid(game, "strong_to_proper_reduction");
    return explicit_game(game.n, game_form::max_losing, complement_members(game.family));
}

namespace detail {

// 1 on assignments with exactly one variable set among 1..n.
inline formula exactly_one(int n) {
    std::vector<formula> cases;
    cases.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<formula> parts;
        parts.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            parts.push_back(j == i ? formula::variable(j)
                                   : formula::negation(formula::variable(j)));
        cases.push_back(formula::conjunction(std::move(parts)));
    }
    return formula::disjunction(std::move(cases));
}

}  // namespace detail

// Lifts a formula phi on n variables (with phi(0^n) = 0, checked) to a
// formula on n+1 variables whose satisfying set fails the antichain
// test when phi is satisfiable. Writing a for variable n+1: on a = 1
// the value is phi(alpha) except that weight-one alphas are forced to
// 0; on a = 0 the value is 1 exactly on the weight-one alphas. Every
// weight-one point of the a = 0 layer then sits below any heavier
// satisfying point of the a = 1 layer.
inline formula sat_reduction(const formula& phi, int n) {
    check_player_count(n);
    if (n + 1 > max_players)
        throw std::invalid_argument("sat_reduction: no room for the extra variable");
    if (phi.max_variable() > n)
        throw std::invalid_argument("sat_reduction: formula mentions variable beyond n");
    if (evaluate(phi, assignment{n, 0}))
        throw std::invalid_argument("sat_reduction: phi(0^n) must be 0");

    const formula one = detail::exactly_one(n);
    const formula flag = formula::variable(n + 1);
    return formula::disjunction({
        formula::conjunction({flag, formula::negation(one), phi}),
        formula::conjunction({formula::negation(flag), one}),
    });
}

}  // namespace sgame
