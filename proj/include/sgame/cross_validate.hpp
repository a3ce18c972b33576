#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/convert.hpp"
#include "sgame/oracle.hpp"
#include "sgame/recognize.hpp"
#include "sgame/weighted.hpp"

namespace sgame {

struct sweep_options {
    int max_players = 4;
    long long oracle_weight_bound = 8;
};

// Outcome of the exhaustive tiny-n sweep: every simple game, every
// explicit form, deciders against the oracle, all conversions against
// enumerated truth, dual involution, and weightedness against the
// bounded exhaustive search.
struct sweep_report {
    int max_players = 0;
    std::uint64_t games = 0;
    std::uint64_t property_checks = 0;
    std::uint64_t conversion_checks = 0;
    std::uint64_t weighted_games = 0;
    std::uint64_t bound_escalations = 0;
    std::uint64_t proper_or_strong_violations = 0;
    std::vector<std::string> structure_failures;  // deciders, conversions, duals
    std::vector<std::string> weighted_failures;   // LP vs exhaustive search

    static constexpr std::size_t failure_cap = 32;

    bool structure_ok() const { return structure_failures.empty(); }
    bool weighted_ok() const { return weighted_failures.empty(); }
    bool ok() const {
        return structure_ok() && weighted_ok() && proper_or_strong_violations == 0;
    }
};

namespace detail {

inline void record(std::vector<std::string>& failures, std::string message) {
    if (failures.size() < sweep_report::failure_cap)
        failures.push_back(std::move(message));
    else if (failures.size() == sweep_report::failure_cap)
        failures.push_back("... further failures suppressed");
}

inline std::string game_tag(int n, const coalition_family& min_winning) {
    std::string tag = "n=" + std::to_string(n) + " Wm=";
    for (coalition c : min_winning.members()) tag += c.to_string();
    return tag;
}

}  // namespace detail

inline sweep_report cross_validate(const sweep_options& options = {}) {
    sweep_report report;
    report.max_players = options.max_players;

    for (int n = 1; n <= options.max_players; ++n) {
        for (const explicit_game& seed : enumerate_games(n)) {
            ++report.games;
            const std::string tag = detail::game_tag(n, seed.family);
            const auto winning = [&](coalition c) {
                for (coalition m : seed.family.members()) {
                    if (m.subset_of(c)) return true;
                }
                return false;
            };

            // ground truth by definition-level enumeration
            const std::uint64_t size = std::uint64_t{1} << n;
            std::vector<coalition> win, lose, min_win, max_lose;
            for (std::uint64_t x = 0; x < size; ++x) {
                const coalition c(x);
                if (winning(c)) {
                    win.push_back(c);
                    bool minimal = true;
                    for (int i : c.players()) {
                        if (winning(c.without(i))) minimal = false;
                    }
                    if (minimal) min_win.push_back(c);
                } else {
                    lose.push_back(c);
                    bool maximal = true;
                    for (int i = 1; i <= n; ++i) {
                        if (!c.contains(i) && !winning(c.with(i))) maximal = false;
                    }
                    if (maximal) max_lose.push_back(c);
                }
            }
            const std::array<coalition_family, 4> truth = {
                coalition_family(n, win), coalition_family(n, lose),
                coalition_family(n, min_win), coalition_family(n, max_lose)};
            const std::array<game_form, 4> forms = {game_form::winning, game_form::losing,
                                                    game_form::min_winning,
                                                    game_form::max_losing};
            if (truth[2] != seed.family)
                detail::record(report.structure_failures, tag + ": enumerated minimal winning family diverges");

            std::array<explicit_game, 4> games = {
                explicit_game(n, forms[0], truth[0]), explicit_game(n, forms[1], truth[1]),
                explicit_game(n, forms[2], truth[2]), explicit_game(n, forms[3], truth[3])};

            const property_report expected = oracle_report(n, winning);
            if (!expected.is_simple) detail::record(report.structure_failures, tag + ": oracle says not simple");

            for (const explicit_game& game : games) {
                const std::string form_tag = tag + " form=" + std::string(to_string(game.form));
                if (!validate_form(game)) {
                    detail::record(report.structure_failures, form_tag + ": validate_form rejected");
                    continue;
                }
                const verdict strong = is_strong(game);
                const verdict proper = is_proper(game);
                const verdict decisive = is_decisive(game);
                report.property_checks += 3;
                if (strong.value != expected.is_strong)
                    detail::record(report.structure_failures, form_tag + ": is_strong disagrees with oracle");
                if (proper.value != expected.is_proper)
                    detail::record(report.structure_failures, form_tag + ": is_proper disagrees with oracle");
                if (decisive.value != expected.is_decisive)
                    detail::record(report.structure_failures, form_tag + ": is_decisive disagrees with oracle");
                if (!strong.value) {
                    if (strong.witness.size() != 2 || !truth[3].contains(strong.witness[0]) ||
                        !truth[3].contains(strong.witness[1]) ||
                        strong.witness[0].union_with(strong.witness[1]) != grand_coalition(n))
                        detail::record(report.structure_failures, form_tag + ": invalid weakness witness");
                }
                if (!proper.value) {
                    if (proper.witness.size() != 2 || !truth[2].contains(proper.witness[0]) ||
                        !truth[2].contains(proper.witness[1]) ||
                        proper.witness[0].intersects(proper.witness[1]))
                        detail::record(report.structure_failures, form_tag + ": invalid improperness witness");
                }

                // conversions against enumerated truth
                for (std::size_t t = 0; t < forms.size(); ++t) {
                    if (forms[t] == game.form) continue;
                    coalition_family converted = [&] {
                        switch (forms[t]) {
                            case game_form::winning: return winning_of(game);
                            case game_form::losing: return losing_of(game);
                            case game_form::min_winning: return minimal_winning_of(game);
                            case game_form::max_losing: return maximal_losing_of(game);
                        }
                        return game.family;
                    }();
                    ++report.conversion_checks;
                    if (converted != truth[t])
                        detail::record(report.structure_failures, form_tag + ": conversion to " +
                                                   std::string(to_string(forms[t])) +
                                                   " diverges from truth");
                }

                const explicit_game twice = dual_of(dual_of(game));
                if (twice.form != game.form || twice.family != game.family)
                    detail::record(report.structure_failures, form_tag + ": dual involution broken");
            }

            // partition law through the converters
            if (winning_of(games[2]).size() + losing_of(games[2]).size() != size)
                detail::record(report.structure_failures, tag + ": winning and losing families do not partition");

            // properness and strongness swap across the dual
            const explicit_game dual = dual_of(games[2]);
            if (is_strong(games[2]).value != is_proper(dual).value ||
                is_proper(games[2]).value != is_strong(dual).value)
                detail::record(report.structure_failures, tag + ": dual does not swap strong and proper");

            // decisive games coincide with their duals
            const bool self_dual = winning_of(dual_of(games[0])) == truth[0];
            if (self_dual != expected.is_decisive)
                detail::record(report.structure_failures, tag + ": self-duality disagrees with decisiveness");

            // weightedness: LP against bounded exhaustive search, on
            // every input form
            const weightedness_report lp_answer = analyze_weighted(games[0]);
            for (std::size_t f = 1; f < games.size(); ++f) {
                if (test_weighted(games[f]).has_value() != lp_answer.realization.has_value())
                    detail::record(report.weighted_failures, tag + ": weightedness disagrees across forms");
            }
            long long bound = options.oracle_weight_bound;
            auto searched = oracle_is_weighted(n, winning, bound);
            while (!searched.has_value() && lp_answer.realization.has_value() &&
                   bound < oracle_weight_bound_cap) {
                ++bound;
                ++report.bound_escalations;
                searched = oracle_is_weighted(n, winning, bound);
            }
            if (searched.has_value() != lp_answer.realization.has_value()) {
                detail::record(report.weighted_failures, tag + ": LP and exhaustive search disagree on weightedness");
            } else if (lp_answer.realization.has_value()) {
                ++report.weighted_games;
                const weighted_realization& r = *lp_answer.realization;
                for (std::uint64_t x = 0; x < size; ++x) {
                    if (r.wins(coalition(x)) != winning(coalition(x))) {
                        detail::record(report.weighted_failures, tag + ": returned realization misrepresents");
                        break;
                    }
                }
                if (!(expected.is_proper || expected.is_strong))
                    ++report.proper_or_strong_violations;
            } else {
                if (!lp_answer.certificate.has_value() ||
                    !verify_infeasibility(lp_answer.lp, *lp_answer.certificate))
                    detail::record(report.weighted_failures, tag + ": missing or invalid infeasibility certificate");
            }
        }
    }
    return report;
}

}  // namespace sgame
