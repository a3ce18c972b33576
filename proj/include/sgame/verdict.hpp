#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgame/coalition.hpp"

namespace sgame {

// Outcome of a property decision. `witness` carries the coalitions (or
// assignments, for succinct checks) that certify a negative answer:
// two maximal losing coalitions covering N for weakness, two disjoint
// minimal winning coalitions for improperness, a counterexample pair
// for monotonicity, and so on. `method` names the decision path taken,
// in particular whether a guarded exponential conversion ran.
struct verdict {
    bool value = false;
    std::vector<coalition> witness;
    std::optional<std::uint64_t> count;
    std::string method;

    explicit operator bool() const { return value; }
};

}  // namespace sgame
