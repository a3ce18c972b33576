#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/convert.hpp"
#include "sgame/error.hpp"
#include "sgame/lp.hpp"
#include "sgame/realization.hpp"
#include "sgame/verdict.hpp"

namespace sgame {

namespace detail {

// Largest supported weight total for the subset-sum tables.
inline constexpr long long dp_weight_limit = 1'000'000;

inline void require_dp_total(long long total, const char* what) {
    if (total > dp_weight_limit)
        throw resource_error(std::string(what) + ": weight total " + std::to_string(total) +
                             " exceeds the DP bound " + std::to_string(dp_weight_limit));
}

// Reachable subset sums of the given (player, weight) items, with
// enough bookkeeping to rebuild one witness subset per sum. Items are
// processed in the given order and sums descend within each item, so
// the recorded chain uses each item at most once.
struct subset_sum_table {
    long long total = 0;
    std::vector<char> reachable;        // size total + 1
    std::vector<std::int32_t> via;      // index into items, -1 for "empty sum"
    std::vector<std::pair<int, long long>> items;  // (player, weight)

    explicit subset_sum_table(std::vector<std::pair<int, long long>> items_)
        : items(std::move(items_)) {
        for (const auto& [player, w] : items) total += w;
        require_dp_total(total, "subset_sum_table");
        reachable.assign(static_cast<std::size_t>(total) + 1, 0);
        via.assign(static_cast<std::size_t>(total) + 1, -1);
        reachable[0] = 1;
        for (std::size_t k = 0; k < items.size(); ++k) {
            const long long w = items[k].second;
            for (long long s = total; s >= w; --s) {
                if (!reachable[static_cast<std::size_t>(s)] &&
                    reachable[static_cast<std::size_t>(s - w)]) {
                    reachable[static_cast<std::size_t>(s)] = 1;
                    via[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(k);
                }
            }
        }
    }

    bool reaches(long long s) const {
        return s >= 0 && s <= total && reachable[static_cast<std::size_t>(s)];
    }

    // First reachable sum in [lo, hi], or nullopt.
    std::optional<long long> first_in(long long lo, long long hi) const {
        for (long long s = std::max<long long>(lo, 0); s <= std::min(hi, total); ++s) {
            if (reachable[static_cast<std::size_t>(s)]) return s;
        }
        return std::nullopt;
    }

    coalition subset_for(long long s) const {
        coalition c;
        while (s > 0) {
            const std::int32_t k = via[static_cast<std::size_t>(s)];
            c = c.with(items[static_cast<std::size_t>(k)].first);
            s -= items[static_cast<std::size_t>(k)].second;
        }
        return c;
    }
};

inline subset_sum_table positive_weight_sums(const weighted_realization& r) {
    std::vector<std::pair<int, long long>> items;
    for (int i = 1; i <= r.players(); ++i) {
        const long long w = r.weights[static_cast<std::size_t>(i - 1)];
        if (w > 0) items.emplace_back(i, w);
    }
    return subset_sum_table(std::move(items));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weightedness of explicit games via exact LP feasibility
// ---------------------------------------------------------------------------

// Variables of the weightedness system: w_1..w_n, then the quota q,
// then the strictness margin d. Constraints, in order: one >= row per
// minimal winning coalition (w(S) - q >= 0), one <= row per maximal
// losing coalition (w(S) - q + d <= 0), then q - d >= 0 and d = 1.
// Nonnegativity of all variables is implicit in rational_lp.
//
// Feasibility with margin 1 is equivalent to feasibility with strict
// inequalities: any strictly feasible point scales to gap >= 1.
inline rational_lp weightedness_lp(const coalition_family& min_winning,
                                   const coalition_family& max_losing, bool homogeneous) {
    const int n = min_winning.players();
    rational_lp lp;
    lp.num_vars = static_cast<std::size_t>(n) + 2;
    const std::size_t quota_ix = static_cast<std::size_t>(n);
    const std::size_t margin_ix = quota_ix + 1;

    auto coalition_row = [&](coalition c) {
        std::vector<rational> coeffs(lp.num_vars, rational(0));
        for (int i : c.players()) coeffs[static_cast<std::size_t>(i - 1)] = 1;
        coeffs[quota_ix] = -1;
        return coeffs;
    };

    for (coalition c : min_winning.members()) {
        lp_constraint row;
        row.coeffs = coalition_row(c);
        row.rel = homogeneous ? relation::equal : relation::greater_equal;
        row.rhs = 0;
        lp.constraints.push_back(std::move(row));
    }
    for (coalition c : max_losing.members()) {
        lp_constraint row;
        row.coeffs = coalition_row(c);
        row.coeffs[margin_ix] = 1;
        row.rel = relation::less_equal;
        row.rhs = 0;
        lp.constraints.push_back(std::move(row));
    }
    {
        lp_constraint row;  // q >= d
        row.coeffs.assign(lp.num_vars, rational(0));
        row.coeffs[quota_ix] = 1;
        row.coeffs[margin_ix] = -1;
        row.rel = relation::greater_equal;
        row.rhs = 0;
        lp.constraints.push_back(std::move(row));
    }
    {
        lp_constraint row;  // d = 1
        row.coeffs.assign(lp.num_vars, rational(0));
        row.coeffs[margin_ix] = 1;
        row.rel = relation::equal;
        row.rhs = 1;
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

struct weightedness_report {
    std::optional<weighted_realization> realization;
    rational_lp lp;
    std::optional<farkas_certificate> certificate;
    coalition_family min_winning;
    coalition_family max_losing;
    std::string method;
};

namespace detail {

// Clears denominators with the lcm and converts to integers.
inline weighted_realization integerize(const std::vector<rational>& point, int n) {
    bigint common = 1;
    for (int j = 0; j <= n; ++j) common = lcm(common, denominator(point[static_cast<std::size_t>(j)]));
    auto scaled = [&](const rational& v) {
        const bigint value = numerator(v) * (common / denominator(v));
        if (value > (std::numeric_limits<long long>::max)())
            throw resource_error("test_weighted: integerized weights exceed 64-bit range");
        return value.convert_to<long long>();
    };
    std::vector<long long> weights(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) weights[static_cast<std::size_t>(j)] = scaled(point[static_cast<std::size_t>(j)]);
    return weighted_realization(scaled(point[static_cast<std::size_t>(n)]), std::move(weights));
}

inline weightedness_report analyze(const explicit_game& game, bool homogeneous,
                                   const char* what) {
    require_valid(game, what);
    weightedness_report report{.realization = std::nullopt,
                               .lp = {},
                               .certificate = std::nullopt,
                               .min_winning = minimal_winning_of(game),
                               .max_losing = maximal_losing_of(game),
                               .method = {}};
    const bool exponential =
        game.form == game_form::min_winning || game.form == game_form::max_losing;
    report.method = std::string(homogeneous ? "homogeneity-lp" : "weightedness-lp") +
                    (exponential ? "+exp-conversion" : "+poly-conversion");
    report.lp = weightedness_lp(report.min_winning, report.max_losing, homogeneous);
    feasibility_result lp_result = lp_feasible(report.lp);
    if (!lp_result.feasible()) {
        report.certificate = std::move(lp_result.certificate);
        return report;
    }
    weighted_realization found = integerize(lp_result.point, game.n);
    for (coalition c : report.min_winning.members()) {
        const bool ok = homogeneous ? found.weight(c) == found.quota : found.wins(c);
        if (!ok) throw std::logic_error(std::string(what) + ": realization failed re-verification");
    }
    for (coalition c : report.max_losing.members()) {
        if (found.wins(c))
            throw std::logic_error(std::string(what) + ": realization failed re-verification");
    }
    report.realization = std::move(found);
    return report;
}

}  // namespace detail

// Decides weightedness of a validated game and, on success, returns an
// integer realization already re-verified against every minimal
// winning and maximal losing coalition. The compact input forms reach
// the LP through a guarded exponential conversion.
inline weightedness_report analyze_weighted(const explicit_game& game) {
    return detail::analyze(game, false, "test_weighted");
}

inline std::optional<weighted_realization> test_weighted(const explicit_game& game) {
    return analyze_weighted(game).realization;
}

// Same system with equalities on the winning rows: feasible exactly for
// games with a realization whose minimal winning coalitions all weigh
// the quota.
inline weightedness_report analyze_homogeneous_explicit(const explicit_game& game) {
    return detail::analyze(game, true, "test_homogeneous_explicit");
}

inline std::optional<weighted_realization> test_homogeneous_explicit(const explicit_game& game) {
    return analyze_homogeneous_explicit(game).realization;
}

// ---------------------------------------------------------------------------
// Pseudo-polynomial checks on integer realizations
// ---------------------------------------------------------------------------

// All minimal coalitions of the weighted game: w(S) >= q but dropping
// any single member falls below q. Enumerates 2^n, guarded.
inline coalition_family min_winning_of_realization(const weighted_realization& r) {
    const int n = r.players();
    require_enumerable(n, "min_winning_of_realization");
    std::vector<coalition> out;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
        long long sum = 0;
        long long lightest = (std::numeric_limits<long long>::max)();
        for (std::uint64_t m = x; m != 0; m &= m - 1) {
            const long long w = r.weights[static_cast<std::size_t>(std::countr_zero(m))];
            sum += w;
            lightest = std::min(lightest, w);
        }
        // minimal iff winning and dropping the lightest member loses
        if (sum >= r.quota && sum - lightest < r.quota) out.emplace_back(x);
    }
    return coalition_family(n, std::move(out));
}

// Decides whether every minimal winning coalition weighs exactly the
// quota, without enumerating coalitions. A counterexample S satisfies
// w(S) >= q+1 while dropping its lightest member drops below q, so it
// is found by anchoring each player j as the minimum-weight member
// (ties resolved toward the smaller index) and asking the subset-sum
// table of the heavier players for a sum in [q+1-w_j, q-1].
inline verdict is_homogeneous_realization(const weighted_realization& r) {
    const int n = r.players();
    for (int j = 1; j <= n; ++j) {
        const long long wj = r.weights[static_cast<std::size_t>(j - 1)];
        // an anchor of weight <= 1 cannot head a minimal coalition heavier
        // than the quota: dropping it would still win
        if (wj <= 1) continue;
        std::vector<std::pair<int, long long>> items;
        for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            const long long wi = r.weights[static_cast<std::size_t>(i - 1)];
            if (wi > wj || (wi == wj && i > j)) items.emplace_back(i, wi);
        }
        detail::subset_sum_table sums(std::move(items));
        if (auto s = sums.first_in(r.quota + 1 - wj, r.quota - 1)) {
            coalition witness = sums.subset_for(*s).with(j);
            return verdict{.value = false,
                           .witness = {witness},
                           .count = std::nullopt,
                           .method = "anchored-subset-sum-dp"};
        }
    }
    return verdict{
        .value = true, .witness = {}, .count = std::nullopt, .method = "anchored-subset-sum-dp"};
}

// Weak exactly when some achievable sum s leaves both s and w(N)-s
// below the quota; the witness coalition and its complement both lose.
inline verdict realization_is_strong(const weighted_realization& r) {
    detail::subset_sum_table sums = detail::positive_weight_sums(r);
    const long long total = sums.total;
    if (auto s = sums.first_in(total - r.quota + 1, r.quota - 1)) {
        coalition side = sums.subset_for(*s);
        return verdict{.value = false,
                       .witness = {side, complement_in(side, r.players())},
                       .count = std::nullopt,
                       .method = "subset-sum-dp"};
    }
    return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = "subset-sum-dp"};
}

// Improper exactly when some achievable sum s has both s and w(N)-s at
// or above the quota; the witness coalition and its complement both win.
inline verdict realization_is_proper(const weighted_realization& r) {
    detail::subset_sum_table sums = detail::positive_weight_sums(r);
    const long long total = sums.total;
    if (auto s = sums.first_in(r.quota, total - r.quota)) {
        coalition side = sums.subset_for(*s);
        return verdict{.value = false,
                       .witness = {side, complement_in(side, r.players())},
                       .count = std::nullopt,
                       .method = "subset-sum-dp"};
    }
    return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = "subset-sum-dp"};
}

// Majority = strong and proper; for weighted games that is the same as
// decisive.
inline verdict realization_is_majority(const weighted_realization& r) {
    verdict strong = realization_is_strong(r);
    if (!strong.value) {
        strong.method += "+weak";
        return strong;
    }
    verdict proper = realization_is_proper(r);
    if (!proper.value) {
        proper.method += "+improper";
        return proper;
    }
    return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = "subset-sum-dp"};
}

}  // namespace sgame
