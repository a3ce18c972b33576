// Command-line front end: reads game, realization, and formula files,
// runs the deciders and converters, and prints one JSON document per
// invocation. Exit codes: 0 when a verdict was computed (even a
// negative one), 1 for invalid input, 2 when a resource guard tripped.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "sgame/sgame.hpp"

namespace {

using namespace sgame;

struct cli_options {
    bool timing = false;
};

class timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void emit(ordered_json doc, const cli_options& options, const timer& t) {
    if (options.timing) doc["timing_seconds"] = t.seconds();
    std::cout << doc.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ordered_json verdict_json(const std::string& property, const verdict& v) {
    ordered_json doc{{"property", property}, {"verdict", v.value}};
    if (!v.witness.empty()) doc["witness"] = witness_to_json(v.witness);
    if (v.count) doc["count"] = *v.count;
    doc["method"] = v.method;
    return doc;
}

ordered_json weightedness_json(const std::string& property, const weightedness_report& report) {
    ordered_json doc{{"property", property},
                     {"verdict", report.realization.has_value()}};
    if (report.realization) doc["realization"] = realization_to_json(*report.realization);
    if (report.certificate) doc["certificate"] = certificate_to_json(report.lp, *report.certificate);
    doc["method"] = report.method;
    return doc;
}

int run_check(const std::string& path, const std::string& property, bool succinct,
              const cli_options& options) {
    const timer t;
    const json input = load_json(path);

    std::optional<explicit_game> parsed;
    if (succinct) {
        const succinct_file file = succinct_from_json(input);
        if (property == "simple") {
            // validation is the whole question; answer it directly
            emit(verdict_json(property, validate_succinct(file.n, file.form, file.phi)), options,
                 t);
            return 0;
        }
        parsed = explicit_from_succinct(file.n, file.phi, file.form);
    } else {
        parsed = game_from_json(input);
    }
    const explicit_game& game = *parsed;

    if (property == "simple") {
        const bool ok = validate_form(game);
        emit(ordered_json{{"property", property}, {"verdict", ok}, {"method", "validate-form"}},
             options, t);
        return 0;
    }
    if (property == "strong") {
        emit(verdict_json(property, is_strong(game)), options, t);
        return 0;
    }
    if (property == "proper") {
        emit(verdict_json(property, is_proper(game)), options, t);
        return 0;
    }
    if (property == "decisive") {
        emit(verdict_json(property, is_decisive(game)), options, t);
        return 0;
    }
    if (property == "weighted") {
        emit(weightedness_json(property, analyze_weighted(game)), options, t);
        return 0;
    }
    if (property == "homogeneous") {
        emit(weightedness_json(property, analyze_homogeneous_explicit(game)), options, t);
        return 0;
    }
    if (property == "majority") {
        const verdict v = is_majority(game);
        ordered_json doc = verdict_json(property, v);
        if (v.value) {
            // a majority verdict embeds a re-verified realization
            const weightedness_report report = analyze_weighted(game);
            if (report.realization) doc["realization"] = realization_to_json(*report.realization);
        }
        emit(std::move(doc), options, t);
        return 0;
    }
    throw std::invalid_argument("unknown property '" + property + "'");
}

int run_convert(const std::string& path, const std::string& target, const cli_options& options) {
    const timer t;
    const explicit_game game = game_from_json(load_json(path));
    explicit_game converted = [&] {
        if (target == "w") return explicit_game(game.n, game_form::winning, winning_of(game));
        if (target == "l") return explicit_game(game.n, game_form::losing, losing_of(game));
        if (target == "wm")
            return explicit_game(game.n, game_form::min_winning, minimal_winning_of(game));
        if (target == "lm")
            return explicit_game(game.n, game_form::max_losing, maximal_losing_of(game));
        throw std::invalid_argument("unknown target form '" + target + "'");
    }();
    emit(ordered_json{{"game", game_to_json(converted)},
                      {"size", converted.family.size()},
                      {"method", "convert"}},
         options, t);
    return 0;
}

int run_dual(const std::string& path, const cli_options& options) {
    const timer t;
    const explicit_game game = game_from_json(load_json(path));
    emit(ordered_json{{"game", game_to_json(dual_of(game))}, {"method", "dual"}}, options, t);
    return 0;
}

int run_realization(const std::string& path, const std::string& check,
                    const cli_options& options) {
    const timer t;
    const weighted_realization r = realization_from_json(load_json(path));
    const verdict v = [&] {
        if (check == "strong") return realization_is_strong(r);
        if (check == "proper") return realization_is_proper(r);
        if (check == "majority") return realization_is_majority(r);
        if (check == "homogeneous-realization") return is_homogeneous_realization(r);
        throw std::invalid_argument("unknown realization check '" + check + "'");
    }();
    emit(verdict_json(check, v), options, t);
    return 0;
}

int run_generate(const std::string& kind, std::uint64_t seed, const std::string& variant,
                 int size, const cli_options& options) {
    const timer t;
    std::mt19937_64 rng(seed);

    if (kind == "partition") {
        const partition_variant v = variant == "strong"   ? partition_variant::strong
                                    : variant == "proper" ? partition_variant::proper
                                                          : partition_variant::majority;
        const int n = size > 0 ? size : static_cast<int>(draw(rng, 1, 15));
        std::vector<long long> values(static_cast<std::size_t>(n));
        long long total = 0;
        for (auto& value : values) {
            value = draw(rng, 0, 50);
            total += value;
        }
        if (total == 0) values[0] = 1;
        const weighted_realization f = partition_reduction(partition_instance{values}, v);
        emit(ordered_json{{"kind", "partition"},
                          {"seed", seed},
                          {"variant", variant},
                          {"values", values},
                          {"realization", realization_to_json(f)}},
             options, t);
        return 0;
    }
    if (kind == "setsplit") {
        const int n = size > 0 ? size : static_cast<int>(draw(rng, 1, 12));
        const int subsets = static_cast<int>(draw(rng, 1, 8));
        std::vector<coalition> members;
        const std::uint64_t full = grand_coalition(n).bits();
        for (int i = 0; i < subsets; ++i) {
            std::uint64_t bits = 0;
            while (bits == 0) bits = rng() & full;
            members.emplace_back(bits);
        }
        const set_splitting_instance inst(n, coalition_family(n, members));
        const explicit_game game = set_splitting_reduction(inst);
        emit(ordered_json{{"kind", "setsplit"},
                          {"seed", seed},
                          {"ground", n},
                          {"collection", family_to_json(inst.collection)},
                          {"game", game_to_json(game)}},
             options, t);
        return 0;
    }
    if (kind == "sat") {
        const int n = size > 0 ? size : static_cast<int>(draw(rng, 2, 6));
        formula phi = formula::constant(false);
        for (;;) {
            // random and/or/not tree; retry until the all-zero assignment fails
            const std::function<formula(int)> build = [&](int depth) -> formula {
                const long long pick = depth <= 0 ? 0 : draw(rng, 0, 7);
                if (pick <= 1) return formula::variable(static_cast<int>(draw(rng, 1, n)));
                if (pick == 2) return formula::negation(build(depth - 1));
                std::vector<formula> kids;
                const long long arity = draw(rng, 2, 3);
                for (long long i = 0; i < arity; ++i) kids.push_back(build(depth - 1));
                return pick <= 5 ? formula::conjunction(std::move(kids))
                                 : formula::disjunction(std::move(kids));
            };
            phi = build(3);
            if (!evaluate(phi, assignment{n, 0})) break;
        }
        const formula lifted = sat_reduction(phi, n);
        emit(ordered_json{{"kind", "sat"},
                          {"seed", seed},
                          {"n", n},
                          {"phi", formula_to_json(phi)},
                          {"succinct", ordered_json{{"n", n + 1},
                                                    {"form", "min_winning"},
                                                    {"formula", formula_to_json(lifted)}}}},
             options, t);
        return 0;
    }
    if (kind == "lemma5") {
        const int k = size > 0 ? size : 3;
        std::vector<coalition> pairs;
        for (int i = 1; i <= k; ++i) pairs.push_back(coalition::of({2 * i - 1, 2 * i}));
        const explicit_game game(2 * k, game_form::min_winning,
                                 coalition_family(2 * k, std::move(pairs)));
        emit(ordered_json{{"kind", "lemma5"}, {"seed", seed}, {"game", game_to_json(game)}},
             options, t);
        return 0;
    }
    throw std::invalid_argument("unknown generator '" + kind + "'");
}

int run_enumerate(int n, bool validate, const cli_options& options) {
    const timer t;
    if (!validate) {
        emit(ordered_json{{"n", n},
                          {"games", enumerate_games(n).size()},
                          {"method", "antichain-enumeration"}},
             options, t);
        return 0;
    }
    const sweep_report report = cross_validate({.max_players = n, .oracle_weight_bound = 8});
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.structure_failures) failures.push_back(f);
    for (const auto& f : report.weighted_failures) failures.push_back(f);
    emit(ordered_json{{"n", n},
                      {"games", report.games},
                      {"property_checks", report.property_checks},
                      {"conversion_checks", report.conversion_checks},
                      {"weighted_games", report.weighted_games},
                      {"proper_or_strong_violations", report.proper_or_strong_violations},
                      {"ok", report.ok()},
                      {"failures", failures},
                      {"method", "cross-validate"}},
         options, t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple game toolkit"};
    app.require_subcommand(1);

    cli_options options;
    app.add_flag("--timing", options.timing, "include wall-clock seconds in the output");

    if (const char* env = std::getenv("SG_MAX_ENUM_N")) {
        try {
            set_enumeration_limit(std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "ignoring invalid SG_MAX_ENUM_N\n";
        }
    }

    std::string file, property, target, check, kind, variant = "majority";
    std::uint64_t seed = 0;
    int size = 0, players = 3;
    bool succinct = false, validate = false;

    auto* check_cmd = app.add_subcommand("check", "decide a property of a game file");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--property", property)
        ->required()
        ->check(CLI::IsMember(
            {"simple", "strong", "proper", "weighted", "homogeneous", "decisive", "majority"}));
    check_cmd->add_flag("--succinct", succinct, "the file holds a boolean formula game");

    auto* convert_cmd = app.add_subcommand("convert", "convert a game file between forms");
    convert_cmd->add_option("file", file)->required();
    convert_cmd->add_option("--to", target)->required()->check(CLI::IsMember({"w", "l", "wm", "lm"}));

    auto* dual_cmd = app.add_subcommand("dual", "emit the dual game");
    dual_cmd->add_option("file", file)->required();

    auto* realization_cmd = app.add_subcommand("realization", "check an integer realization");
    realization_cmd->add_option("file", file)->required();
    realization_cmd->add_option("--check", check)
        ->required()
        ->check(CLI::IsMember({"strong", "proper", "majority", "homogeneous-realization"}));

    auto* generate_cmd = app.add_subcommand("generate", "emit a reduction instance");
    generate_cmd->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"partition", "setsplit", "sat", "lemma5"}));
    generate_cmd->add_option("--seed", seed);
    generate_cmd->add_option("--variant", variant)
        ->check(CLI::IsMember({"strong", "proper", "majority"}));
    generate_cmd->add_option("--size", size);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate tiny games");
    enumerate_cmd->add_option("-n", players)->required();
    enumerate_cmd->add_flag("--cross-validate", validate,
                            "sweep every game against the brute-force oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_cmd->parsed()) return run_check(file, property, succinct, options);
        if (convert_cmd->parsed()) return run_convert(file, target, options);
        if (dual_cmd->parsed()) return run_dual(file, options);
        if (realization_cmd->parsed()) return run_realization(file, check, options);
        if (generate_cmd->parsed()) return run_generate(kind, seed, variant, size, options);
        if (enumerate_cmd->parsed()) return run_enumerate(players, validate, options);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
