#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/detail/bit_table.hpp"
#include "sgame/error.hpp"
#include "sgame/verdict.hpp"

namespace sgame {

// A truth assignment to variables 1..n, one bit per variable. The same
// mask encoding as coalition: assignment bits name the players present.
struct assignment {
    int n = 0;
    std::uint64_t bits = 0;

    bool bit(int i) const { return (bits >> (i - 1)) & 1u; }
    coalition to_coalition() const { return coalition(bits); }

    static assignment of(int n, coalition c) { return assignment{n, c.bits()}; }

    friend bool operator==(const assignment&, const assignment&) = default;
};

// Immutable formula AST over variables 1..n with and/or/not/constants.
// Conjunction and disjunction are n-ary; empty lists collapse to their
// identities (true and false).
class formula {
public:
    enum class kind { constant, variable, negation, conjunction, disjunction };

    static formula constant(bool value) {
        return formula(std::make_shared<node>(node{kind::constant, value, 0, {}}));
    }
    static formula variable(int index) {
        if (index < 1 || index > max_players)
            throw std::invalid_argument("formula: variable index " + std::to_string(index) +
                                        " outside 1.." + std::to_string(max_players));
        return formula(std::make_shared<node>(node{kind::variable, false, index, {}}));
    }
    static formula negation(formula f) {
        return formula(std::make_shared<node>(node{kind::negation, false, 0, {std::move(f)}}));
    }
    static formula conjunction(std::vector<formula> fs) {
        return formula(std::make_shared<node>(node{kind::conjunction, false, 0, std::move(fs)}));
    }
    static formula disjunction(std::vector<formula> fs) {
        return formula(std::make_shared<node>(node{kind::disjunction, false, 0, std::move(fs)}));
    }

    kind node_kind() const { return node_->k; }
    bool constant_value() const { return node_->value; }
    int variable_index() const { return node_->var; }
    const std::vector<formula>& operands() const { return node_->kids; }

    int max_variable() const {
        switch (node_->k) {
            case kind::constant: return 0;
            case kind::variable: return node_->var;
            default: {
                int m = 0;
                for (const formula& f : node_->kids) m = std::max(m, f.max_variable());
                return m;
            }
        }
    }

private:
    struct node {
        kind k;
        bool value;
        int var;
        std::vector<formula> kids;
    };

    explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}

    std::shared_ptr<const node> node_;
};

// Standard Boolean evaluation. Throws if the formula mentions a
// variable past the assignment's arity.
inline bool evaluate(const formula& phi, const assignment& x) {
    switch (phi.node_kind()) {
        case formula::kind::constant: return phi.constant_value();
        case formula::kind::variable:
            if (phi.variable_index() > x.n)
                throw std::invalid_argument("evaluate: variable " +
                                            std::to_string(phi.variable_index()) +
                                            " beyond assignment arity " + std::to_string(x.n));
            return x.bit(phi.variable_index());
        case formula::kind::negation: return !evaluate(phi.operands().front(), x);
        case formula::kind::conjunction:
            for (const formula& f : phi.operands()) {
                if (!evaluate(f, x)) return false;
            }
            return true;
        case formula::kind::disjunction:
            for (const formula& f : phi.operands()) {
                if (evaluate(f, x)) return true;
            }
            return false;
    }
    throw std::invalid_argument("evaluate: unknown node");
}

namespace detail {

// Evaluates the formula on all 2^n assignments at once, 64 per word.
inline bit_table evaluate_all(const formula& phi, int n) {
    switch (phi.node_kind()) {
        case formula::kind::constant: {
            bit_table t(n);
            if (phi.constant_value()) t.fill();
            return t;
        }
        case formula::kind::variable: {
            if (phi.variable_index() > n)
                throw std::invalid_argument("evaluate: variable " +
                                            std::to_string(phi.variable_index()) +
                                            " beyond arity " + std::to_string(n));
            return bit_table::variable_pattern(n, phi.variable_index());
        }
        case formula::kind::negation: {
            bit_table t = evaluate_all(phi.operands().front(), n);
            t.flip();
            return t;
        }
        case formula::kind::conjunction: {
            bit_table t(n);
            t.fill();
            for (const formula& f : phi.operands()) t &= evaluate_all(f, n);
            return t;
        }
        case formula::kind::disjunction: {
            bit_table t(n);
            for (const formula& f : phi.operands()) t |= evaluate_all(f, n);
            return t;
        }
    }
    throw std::invalid_argument("evaluate: unknown node");
}

// Walks upward from a satisfying point to another satisfying point
// strictly above it, using the superset-closure table for guidance.
inline std::uint64_t satisfying_strict_superset(const bit_table& sat, const bit_table& closure,
                                                std::uint64_t x, int n) {
    std::uint64_t cur = x;
    for (;;) {
        bool advanced = false;
        for (int b = 0; b < n && !advanced; ++b) {
            const std::uint64_t bit = std::uint64_t{1} << b;
            if ((cur & bit) == 0 && closure.test(cur | bit)) {
                cur |= bit;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("satisfying_strict_superset: walk stuck");
        if (cur != x && sat.test(cur)) return cur;
    }
}

}  // namespace detail

// The monotone disjunctive normal form with one conjunct per minimal
// winning coalition; it evaluates to 1 exactly on the winning
// coalitions of the game the family determines.
inline formula dnf_of_min_winning(const coalition_family& family) {
    if (!validate_form(family.players(), game_form::min_winning, family))
        throw invalid_game_error("dnf_of_min_winning: not a valid min_winning family");
    std::vector<formula> conjuncts;
    conjuncts.reserve(family.size());
    for (coalition c : family.members()) {
        std::vector<formula> vars;
        vars.reserve(static_cast<std::size_t>(c.size()));
        for (int i : c.players()) vars.push_back(formula::variable(i));
        conjuncts.push_back(formula::conjunction(std::move(vars)));
    }
    return formula::disjunction(std::move(conjuncts));
}

// Validates a formula as a succinct game form by exhaustive evaluation
// (guarded). Winning: monotone with the right endpoints. Losing: the
// negation is monotone, endpoints swapped. Minimal winning / maximal
// losing: the satisfying set is a nonempty antichain excluding the
// empty (full) assignment. A failing pair of assignments is returned
// as the witness.
inline verdict validate_succinct(int n, game_form form, const formula& phi) {
    check_player_count(n);
    require_enumerable(n, "validate_succinct");
    if (phi.max_variable() > n)
        throw std::invalid_argument("validate_succinct: formula mentions variable beyond n");

    const detail::bit_table sat = detail::evaluate_all(phi, n);
    const std::uint64_t full = grand_coalition(n).bits();
    auto fail = [&](std::vector<coalition> witness, const char* method) {
        return verdict{.value = false,
                       .witness = std::move(witness),
                       .count = std::nullopt,
                       .method = method};
    };
    auto pass = [&](const char* method) {
        return verdict{.value = true, .witness = {}, .count = std::nullopt, .method = method};
    };

    switch (form) {
        case game_form::winning:
        case game_form::losing: {
            const bool winning = form == game_form::winning;
            const char* method = winning ? "monotone-scan" : "antitone-scan";
            // single-bit raises suffice: transitivity covers the rest
            for (std::uint64_t x = 0; x < sat.size(); ++x) {
                const bool low = sat.test(x);
                for (int b = 0; b < n; ++b) {
                    const std::uint64_t bit = std::uint64_t{1} << b;
                    if (x & bit) continue;
                    const bool high = sat.test(x | bit);
                    const bool bad = winning ? (low && !high) : (!low && high);
                    if (bad) return fail({coalition(x), coalition(x | bit)}, method);
                }
            }
            const bool empty_ok = sat.test(0) == !winning;
            const bool full_ok = sat.test(full) == winning;
            if (!empty_ok) return fail({coalition(0)}, method);
            if (!full_ok) return fail({coalition(full)}, method);
            return pass(method);
        }
        case game_form::min_winning:
        case game_form::max_losing: {
            const char* method = "antichain-scan";
            if (!sat.any()) return fail({}, method);
            const std::uint64_t excluded = form == game_form::min_winning ? 0 : full;
            if (sat.test(excluded)) return fail({coalition(excluded)}, method);
            detail::bit_table closure = sat;
            closure.close_downward();  // marks x when some satisfying y >= x exists
            for (std::uint64_t x = 0; x < sat.size(); ++x) {
                if (!sat.test(x)) continue;
                for (int b = 0; b < n; ++b) {
                    const std::uint64_t bit = std::uint64_t{1} << b;
                    if ((x & bit) == 0 && closure.test(x | bit)) {
                        const std::uint64_t above =
                            detail::satisfying_strict_superset(sat, closure, x, n);
                        return fail({coalition(x), coalition(above)}, method);
                    }
                }
            }
            return pass(method);
        }
    }
    throw std::invalid_argument("validate_succinct: unknown form");
}

// Expands a validated succinct game into the corresponding explicit
// form by collecting the satisfying assignments.
inline explicit_game explicit_from_succinct(int n, const formula& phi, game_form form) {
    verdict valid = validate_succinct(n, form, phi);
    if (!valid.value)
        throw invalid_formula_error("explicit_from_succinct: formula is not a valid " +
                                    std::string(to_string(form)) + "-form game");
    const detail::bit_table sat = detail::evaluate_all(phi, n);
    std::vector<coalition> members;
    members.reserve(sat.count());
    for (std::uint64_t x = 0; x < sat.size(); ++x) {
        if (sat.test(x)) members.emplace_back(x);
    }
    return explicit_game(n, form, coalition_family(n, std::move(members)));
}

}  // namespace sgame
