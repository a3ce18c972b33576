#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/error.hpp"
#include "sgame/realization.hpp"

namespace sgame {

// Brute-force reference answers, computed straight from the defining
// quantifiers with no reuse of the decision modules. Everything here
// exists to anchor correctness at tiny n, not to be fast.

using winning_predicate = std::function<bool(coalition)>;

struct property_report {
    bool is_simple = false;
    bool is_strong = false;
    bool is_proper = false;
    bool is_decisive = false;
    std::uint64_t winning_count = 0;
};

inline constexpr int oracle_max_players = 16;

// Evaluates simplicity, strongness, properness, and decisiveness by
// quantifying over all 2^n coalitions.
inline property_report oracle_report(int n, const winning_predicate& winning) {
    check_player_count(n);
    if (n > oracle_max_players)
        throw resource_error("oracle_report: n exceeds the oracle bound of " +
                             std::to_string(oracle_max_players));
    const std::uint64_t size = std::uint64_t{1} << n;
    const coalition all = grand_coalition(n);

    property_report report;
    report.is_simple = winning(all) && !winning(coalition{});
    for (std::uint64_t x = 0; x < size && report.is_simple; ++x) {
        if (!winning(coalition(x))) continue;
        for (int b = 0; b < n; ++b) {
            const std::uint64_t bit = std::uint64_t{1} << b;
            if ((x & bit) == 0 && !winning(coalition(x | bit))) {
                report.is_simple = false;
                break;
            }
        }
    }
    report.is_strong = true;
    report.is_proper = true;
    for (std::uint64_t x = 0; x < size; ++x) {
        const coalition c(x);
        const coalition rest = complement_in(c, n);
        const bool w = winning(c);
        if (w) ++report.winning_count;
        if (!w && !winning(rest)) report.is_strong = false;
        if (w && winning(rest)) report.is_proper = false;
    }
    report.is_decisive = report.is_strong && report.is_proper;
    return report;
}

inline constexpr int oracle_weight_players = 5;
inline constexpr long long oracle_weight_bound_cap = 10;

// Exhaustive search for an integer realization with all weights in
// [0, bound]: weight vectors ascend lexicographically, and for each
// vector the smallest workable quota is one past the heaviest losing
// coalition. Returns the first hit, or nothing within the bound.
inline std::optional<weighted_realization> oracle_is_weighted(int n,
                                                              const winning_predicate& winning,
                                                              long long bound) {
    check_player_count(n);
    if (n > oracle_weight_players)
        throw resource_error("oracle_is_weighted: n exceeds the oracle bound of " +
                             std::to_string(oracle_weight_players));
    if (bound < 0 || bound > oracle_weight_bound_cap)
        throw resource_error("oracle_is_weighted: weight bound outside 0.." +
                             std::to_string(oracle_weight_bound_cap));
    const std::uint64_t size = std::uint64_t{1} << n;

    std::vector<long long> w(static_cast<std::size_t>(n), 0);
    for (;;) {
        long long total = 0;
        for (long long v : w) total += v;
        if (total > 0) {
            long long min_winning_weight = total + 1;
            long long max_losing_weight = -1;
            for (std::uint64_t x = 0; x < size; ++x) {
                long long sum = 0;
                for (int b = 0; b < n; ++b) {
                    if ((x >> b) & 1u) sum += w[static_cast<std::size_t>(b)];
                }
                if (winning(coalition(x)))
                    min_winning_weight = std::min(min_winning_weight, sum);
                else
                    max_losing_weight = std::max(max_losing_weight, sum);
            }
            const long long quota = std::max<long long>(max_losing_weight + 1, 1);
            if (quota <= min_winning_weight && quota <= total)
                return weighted_realization(quota, w);
        }
        // next weight vector in lexicographic order
        int pos = n - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == bound) {
            w[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++w[static_cast<std::size_t>(pos)];
    }
}

inline constexpr int oracle_enumeration_players = 4;

// Every simple game on n players, one per nonempty antichain of
// nonempty coalitions, presented in minimal winning form. Candidate
// families are indexed by subsets of the 2^n - 1 nonempty coalitions.
inline std::vector<explicit_game> enumerate_games(int n) {
    check_player_count(n);
    if (n > oracle_enumeration_players)
        throw resource_error("enumerate_games: n exceeds the oracle bound of " +
                             std::to_string(oracle_enumeration_players));
    const std::uint64_t coalitions = (std::uint64_t{1} << n) - 1;  // nonempty ones
    std::vector<explicit_game> games;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << coalitions); ++pick) {
        std::vector<coalition> members;
        for (std::uint64_t m = pick; m != 0; m &= m - 1) {
            members.emplace_back(static_cast<std::uint64_t>(std::countr_zero(m)) + 1);
        }
        coalition_family family(n, std::move(members));
        if (!is_antichain(family)) continue;
        games.emplace_back(n, game_form::min_winning, std::move(family));
    }
    return games;
}

}  // namespace sgame
