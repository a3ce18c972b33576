#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace sgame {

// Base class for library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A game or family failed structural validation for its declared form.
class invalid_game_error : public error {
public:
    using error::error;
};

// A formula failed validation for its declared succinct form.
class invalid_formula_error : public error {
public:
    using error::error;
};

// An operation refused to run because it would exceed a configured
// resource bound (exponential enumeration, oversized DP table, ...).
class resource_error : public error {
public:
    using error::error;
};

namespace detail {

inline std::atomic<int>& enumeration_limit_slot() {
    static std::atomic<int> limit{24};
    return limit;
}

}  // namespace detail

// Player-count bound for operations that enumerate all 2^n coalitions.
// Conversions between the compact forms are exponential in the worst
// case, so they fail fast instead of silently grinding.
inline int enumeration_limit() { return detail::enumeration_limit_slot().load(); }

inline void set_enumeration_limit(int n) { detail::enumeration_limit_slot().store(n); }

inline void require_enumerable(int n, const char* what) {
    const int limit = enumeration_limit();
    if (n > limit) {
        throw resource_error(std::string(what) + ": " + std::to_string(n) +
                             " players exceed the enumeration limit of " + std::to_string(limit));
    }
}

}  // namespace sgame
