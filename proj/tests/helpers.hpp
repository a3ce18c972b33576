#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sgame/coalition.hpp"
#include "sgame/succinct.hpp"

namespace testutil {

// Bounded draw that does not lean on distribution internals, so the
// same seed replays the same sequence everywhere.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline sgame::coalition random_nonempty_coalition(std::mt19937_64& rng, int n) {
    const std::uint64_t full = sgame::grand_coalition(n).bits();
    for (;;) {
        const std::uint64_t bits = rng() & full;
        if (bits != 0) return sgame::coalition(bits);
    }
}

inline sgame::coalition_family random_family(std::mt19937_64& rng, int n, int members) {
    std::vector<sgame::coalition> out;
    out.reserve(static_cast<std::size_t>(members));
    for (int i = 0; i < members; ++i) out.push_back(random_nonempty_coalition(rng, n));
    return sgame::coalition_family(n, std::move(out));
}

inline sgame::coalition_family random_min_winning_family(std::mt19937_64& rng, int n,
                                                         int members) {
    return sgame::minimize(random_family(rng, n, members));
}

// Random formula tree over variables 1..n.
inline sgame::formula random_formula(std::mt19937_64& rng, int n, int depth) {
    const long long pick = depth <= 0 ? draw(rng, 0, 1) : draw(rng, 0, 9);
    if (pick <= 1) return sgame::formula::variable(static_cast<int>(draw(rng, 1, n)));
    if (pick == 2) return sgame::formula::constant(draw(rng, 0, 1) == 1);
    if (pick == 3) return sgame::formula::negation(random_formula(rng, n, depth - 1));
    std::vector<sgame::formula> kids;
    const long long arity = draw(rng, 2, 3);
    for (long long i = 0; i < arity; ++i) kids.push_back(random_formula(rng, n, depth - 1));
    if (pick <= 6) return sgame::formula::conjunction(std::move(kids));
    return sgame::formula::disjunction(std::move(kids));
}

// Definition-level partition oracle: can the values split evenly?
inline bool partition_exists(const std::vector<long long>& values) {
    long long total = 0;
    for (long long v : values) total += v;
    if (total % 2 != 0) return false;
    const long long half = total / 2;
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (long long v : values) {
        for (long long s = total; s >= v; --s) {
            if (reach[static_cast<std::size_t>(s - v)]) reach[static_cast<std::size_t>(s)] = 1;
        }
    }
    return reach[static_cast<std::size_t>(half)] != 0;
}

}  // namespace testutil
