#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgame/coalition.hpp"

namespace sgame {

// An integer quota and integer weights: coalition S wins exactly when
// its total weight reaches the quota.
struct weighted_realization {
    long long quota = 0;
    std::vector<long long> weights;

    weighted_realization(long long quota_, std::vector<long long> weights_)
        : quota(quota_), weights(std::move(weights_)) {
        check_player_count(static_cast<int>(weights.size()));
        long long sum = 0;
        for (long long w : weights) {
            if (w < 0) throw std::invalid_argument("weighted_realization: negative weight");
            if (w > (std::numeric_limits<long long>::max)() - sum)
                throw std::invalid_argument("weighted_realization: weight total overflows");
            sum += w;
        }
        if (quota <= 0 || quota > sum)
            throw std::invalid_argument("weighted_realization: quota must satisfy 0 < q <= w(N)");
    }

    int players() const { return static_cast<int>(weights.size()); }

    long long total() const { return std::accumulate(weights.begin(), weights.end(), 0LL); }

    long long weight(coalition c) const {
        long long sum = 0;
        for (int i : c.players()) {
            if (i > players())
                throw std::invalid_argument("weight: coalition mentions player " +
                                            std::to_string(i) + " beyond n");
            sum += weights[static_cast<std::size_t>(i - 1)];
        }
        return sum;
    }

    bool wins(coalition c) const { return weight(c) >= quota; }

    friend bool operator==(const weighted_realization&, const weighted_realization&) = default;
};

}  // namespace sgame
