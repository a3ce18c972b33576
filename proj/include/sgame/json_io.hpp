#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/lp.hpp"
#include "sgame/realization.hpp"
#include "sgame/succinct.hpp"
#include "sgame/verdict.hpp"
#include "sgame/weighted.hpp"

namespace sgame {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

inline game_form form_from_string(const std::string& s) {
    if (s == "winning") return game_form::winning;
    if (s == "losing") return game_form::losing;
    if (s == "min_winning") return game_form::min_winning;
    if (s == "max_losing") return game_form::max_losing;
    throw std::invalid_argument("unknown game form '" + s + "'");
}

inline coalition coalition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coalition must be an array of players");
    coalition c;
    for (const auto& p : j) {
        if (!p.is_number_integer())
            throw std::invalid_argument("coalition members must be integers");
        c = c.with(p.get<int>());
    }
    return c;
}

// Game file: {"n": 4, "form": "min_winning", "coalitions": [[1,2],[3,4]]}
inline explicit_game game_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("form") || !j.contains("coalitions"))
        throw std::invalid_argument("game file needs fields n, form, coalitions");
    const int n = j.at("n").get<int>();
    const game_form form = form_from_string(j.at("form").get<std::string>());
    std::vector<coalition> members;
    for (const auto& c : j.at("coalitions")) members.push_back(coalition_from_json(c));
    return explicit_game(n, form, coalition_family(n, std::move(members)));
}

// Realization file: {"quota": 3, "weights": [1,1,2]}
inline weighted_realization realization_from_json(const json& j) {
    if (!j.is_object() || !j.contains("quota") || !j.contains("weights"))
        throw std::invalid_argument("realization file needs fields quota, weights");
    std::vector<long long> weights;
    for (const auto& w : j.at("weights")) {
        if (!w.is_number_integer()) throw std::invalid_argument("weights must be integers");
        weights.push_back(w.get<long long>());
    }
    return weighted_realization(j.at("quota").get<long long>(), std::move(weights));
}

// Formula wire format: nested arrays headed by an operator string
// ("and", "or", "not", "true", "false"); a bare positive integer is a
// variable.
inline formula formula_from_json(const json& j) {
    if (j.is_number_integer()) return formula::variable(j.get<int>());
    if (!j.is_array() || j.empty() || !j[0].is_string())
        throw std::invalid_argument("formula nodes are [op, ...] arrays or variable integers");
    const std::string op = j[0].get<std::string>();
    if (op == "true" || op == "false") {
        if (j.size() != 1) throw std::invalid_argument("constant formula takes no operands");
        return formula::constant(op == "true");
    }
    if (op == "not") {
        if (j.size() != 2) throw std::invalid_argument("'not' takes exactly one operand");
        return formula::negation(formula_from_json(j[1]));
    }
    if (op == "and" || op == "or") {
        std::vector<formula> kids;
        for (std::size_t i = 1; i < j.size(); ++i) kids.push_back(formula_from_json(j[i]));
        return op == "and" ? formula::conjunction(std::move(kids))
                           : formula::disjunction(std::move(kids));
    }
    throw std::invalid_argument("unknown formula operator '" + op + "'");
}

struct succinct_file {
    int n = 0;
    game_form form = game_form::winning;
    formula phi = formula::constant(false);
};

// Succinct file: {"n": 4, "form": "winning", "formula": [...]}
inline succinct_file succinct_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("form") || !j.contains("formula"))
        throw std::invalid_argument("succinct file needs fields n, form, formula");
    return succinct_file{j.at("n").get<int>(),
                         form_from_string(j.at("form").get<std::string>()),
                         formula_from_json(j.at("formula"))};
}

// ---------------------------------------------------------------------------
// serialization (ordered_json keeps field order deterministic)
// ---------------------------------------------------------------------------

inline ordered_json coalition_to_json(coalition c) {
    ordered_json arr = ordered_json::array();
    for (int p : c.players()) arr.push_back(p);
    return arr;
}

inline ordered_json family_to_json(const coalition_family& family) {
    ordered_json arr = ordered_json::array();
    for (coalition c : family.members()) arr.push_back(coalition_to_json(c));
    return arr;
}

inline ordered_json game_to_json(const explicit_game& game) {
    return ordered_json{{"n", game.n},
                        {"form", std::string(to_string(game.form))},
                        {"coalitions", family_to_json(game.family)}};
}

inline ordered_json realization_to_json(const weighted_realization& r) {
    return ordered_json{{"quota", r.quota}, {"weights", r.weights}};
}

inline ordered_json formula_to_json(const formula& phi) {
    switch (phi.node_kind()) {
        case formula::kind::constant:
            return ordered_json::array({phi.constant_value() ? "true" : "false"});
        case formula::kind::variable: return ordered_json(phi.variable_index());
        case formula::kind::negation: {
            return ordered_json::array({"not", formula_to_json(phi.operands().front())});
        }
        case formula::kind::conjunction:
        case formula::kind::disjunction: {
            ordered_json arr = ordered_json::array();
            arr.push_back(phi.node_kind() == formula::kind::conjunction ? "and" : "or");
            for (const formula& f : phi.operands()) arr.push_back(formula_to_json(f));
            return arr;
        }
    }
    throw std::invalid_argument("formula_to_json: unknown node");
}

inline std::string rational_to_string(const rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

inline ordered_json lp_to_json(const rational_lp& lp) {
    ordered_json rows = ordered_json::array();
    for (const lp_constraint& c : lp.constraints) {
        ordered_json coeffs = ordered_json::array();
        for (const rational& v : c.coeffs) coeffs.push_back(rational_to_string(v));
        rows.push_back(ordered_json{{"coeffs", coeffs},
                                    {"relation", std::string(to_string(c.rel))},
                                    {"rhs", rational_to_string(c.rhs)}});
    }
    return ordered_json{{"variables", lp.num_vars}, {"constraints", rows}};
}

inline ordered_json certificate_to_json(const rational_lp& lp, const farkas_certificate& cert) {
    ordered_json multipliers = ordered_json::array();
    for (const rational& v : cert.multipliers) multipliers.push_back(rational_to_string(v));
    return ordered_json{{"type", "farkas-infeasibility"},
                        {"multipliers", multipliers},
                        {"lp", lp_to_json(lp)},
                        {"verified", verify_infeasibility(lp, cert)}};
}

inline ordered_json witness_to_json(const std::vector<coalition>& witness) {
    ordered_json arr = ordered_json::array();
    for (coalition c : witness) arr.push_back(coalition_to_json(c));
    return ordered_json{{"coalitions", arr}};
}

}  // namespace sgame
