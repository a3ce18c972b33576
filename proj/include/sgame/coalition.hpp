#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgame/error.hpp"

namespace sgame {

inline constexpr int max_players = 64;

// A set of players out of {1..n}, stored as a bit mask (player i <-> bit i-1).
// The mask alone does not know n; families and games carry the player count.
class coalition {
public:
    constexpr coalition() = default;
    constexpr explicit coalition(std::uint64_t bits) : bits_(bits) {}

    static coalition of(std::initializer_list<int> players) {
        coalition c;
        for (int p : players) c = c.with(p);
        return c;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int player) const {
        return player >= 1 && player <= max_players && (bits_ >> (player - 1)) & 1u;
    }

    constexpr bool subset_of(coalition other) const { return (bits_ & other.bits_) == bits_; }
    constexpr bool proper_subset_of(coalition other) const {
        return bits_ != other.bits_ && subset_of(other);
    }
    constexpr bool intersects(coalition other) const { return (bits_ & other.bits_) != 0; }

    coalition with(int player) const {
        check_player(player);
        return coalition(bits_ | (std::uint64_t{1} << (player - 1)));
    }
    coalition without(int player) const {
        check_player(player);
        return coalition(bits_ & ~(std::uint64_t{1} << (player - 1)));
    }

    constexpr coalition union_with(coalition other) const { return coalition(bits_ | other.bits_); }
    constexpr coalition intersection_with(coalition other) const {
        return coalition(bits_ & other.bits_);
    }

    std::vector<int> players() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int p : players()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    friend constexpr bool operator==(coalition, coalition) = default;

private:
    static void check_player(int player) {
        if (player < 1 || player > max_players)
            throw std::invalid_argument("player index " + std::to_string(player) +
                                        " outside 1.." + std::to_string(max_players));
    }

    std::uint64_t bits_ = 0;
};

// Canonical order: ascending cardinality, ties by ascending mask value.
// Every family-valued result is sorted this way, so results compare by ==.
constexpr bool canonical_less(coalition a, coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

inline void check_player_count(int n) {
    if (n < 1 || n > max_players)
        throw std::invalid_argument("player count " + std::to_string(n) + " outside 1.." +
                                    std::to_string(max_players));
}

inline coalition grand_coalition(int n) {
    check_player_count(n);
    return coalition(n == max_players ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

inline coalition complement_in(coalition c, int n) {
    return coalition(grand_coalition(n).bits() & ~c.bits());
}

// A duplicate-free list of coalitions over {1..n} in canonical order.
class coalition_family {
public:
    explicit coalition_family(int n) : n_(n) { check_player_count(n); }

    coalition_family(int n, std::vector<coalition> members) : n_(n), members_(std::move(members)) {
        check_player_count(n);
        const std::uint64_t full = grand_coalition(n).bits();
        for (coalition c : members_) {
            if ((c.bits() & ~full) != 0)
                throw std::invalid_argument("coalition " + c.to_string() +
                                            " has players outside 1.." + std::to_string(n));
        }
        std::sort(members_.begin(), members_.end(), canonical_less);
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static coalition_family of(int n, std::initializer_list<std::initializer_list<int>> sets) {
        std::vector<coalition> members;
        members.reserve(sets.size());
        for (const auto& s : sets) members.push_back(coalition::of(s));
        return coalition_family(n, std::move(members));
    }

    int players() const { return n_; }
    const std::vector<coalition>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(coalition c) const {
        return std::binary_search(members_.begin(), members_.end(), c, canonical_less);
    }

    friend bool operator==(const coalition_family&, const coalition_family&) = default;

private:
    int n_;
    std::vector<coalition> members_;
};

// True when every one-element extension of a member is present; by
// induction that covers all supersets.
inline bool is_upward_closed(const coalition_family& family) {
    const int n = family.players();
    for (coalition c : family.members()) {
        for (int i = 1; i <= n; ++i) {
            if (!c.contains(i) && !family.contains(c.with(i))) return false;
        }
    }
    return true;
}

inline bool is_downward_closed(const coalition_family& family) {
    for (coalition c : family.members()) {
        for (int i : c.players()) {
            if (!family.contains(c.without(i))) return false;
        }
    }
    return true;
}

// No member strictly contains another.
inline bool is_antichain(const coalition_family& family) {
    const auto& m = family.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            // canonical order sorts by cardinality, so only m[i] can sit below m[j]
            if (m[i].proper_subset_of(m[j])) return false;
        }
    }
    return true;
}

// The inclusion-minimal members, canonically ordered.
inline coalition_family minimize(const coalition_family& family) {
    const auto& m = family.members();
    std::vector<coalition> keep;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i && minimal; ++j) {
            if (m[j].proper_subset_of(m[i])) minimal = false;
        }
        if (minimal) keep.push_back(m[i]);
    }
    return coalition_family(family.players(), std::move(keep));
}

// The inclusion-maximal members, canonically ordered.
inline coalition_family maximize(const coalition_family& family) {
    const auto& m = family.members();
    std::vector<coalition> keep;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < m.size() && maximal; ++j) {
            if (m[i].proper_subset_of(m[j])) maximal = false;
        }
        if (maximal) keep.push_back(m[i]);
    }
    return coalition_family(family.players(), std::move(keep));
}

// {N \ S : S in family}; an involution.
inline coalition_family complement_members(const coalition_family& family) {
    std::vector<coalition> out;
    out.reserve(family.size());
    for (coalition c : family.members()) out.push_back(complement_in(c, family.players()));
    return coalition_family(family.players(), std::move(out));
}

// Set difference a \ b over canonically ordered families with equal n.
inline coalition_family family_difference(const coalition_family& a, const coalition_family& b) {
    if (a.players() != b.players())
        throw std::invalid_argument("family_difference: player counts differ");
    std::vector<coalition> out;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out), canonical_less);
    return coalition_family(a.players(), std::move(out));
}

enum class game_form { winning, losing, min_winning, max_losing };

inline std::string_view to_string(game_form f) {
    switch (f) {
        case game_form::winning: return "winning";
        case game_form::losing: return "losing";
        case game_form::min_winning: return "min_winning";
        case game_form::max_losing: return "max_losing";
    }
    return "?";
}

// A game presented as one of the four explicit coalition lists.
struct explicit_game {
    int n;
    game_form form;
    coalition_family family;

    explicit_game(int n_, game_form form_, coalition_family family_)
        : n(n_), form(form_), family(std::move(family_)) {
        if (family.players() != n)
            throw std::invalid_argument("explicit_game: family player count differs from n");
    }
};

// Structural laws of each explicit form. Returns false instead of
// throwing so it can serve as the simplicity test itself.
inline bool validate_form(int n, game_form form, const coalition_family& family) {
    if (family.players() != n) return false;
    const coalition all = grand_coalition(n);
    switch (form) {
        case game_form::winning:
            return is_upward_closed(family) && family.contains(all) &&
                   !family.contains(coalition{});
        case game_form::losing:
            return is_downward_closed(family) && family.contains(coalition{}) &&
                   !family.contains(all);
        case game_form::min_winning:
            return !family.empty() && is_antichain(family) && !family.contains(coalition{});
        case game_form::max_losing:
            return !family.empty() && is_antichain(family) && !family.contains(all);
    }
    return false;
}

inline bool validate_form(const explicit_game& g) { return validate_form(g.n, g.form, g.family); }

inline void require_valid(const explicit_game& g, const char* what) {
    if (!validate_form(g))
        throw invalid_game_error(std::string(what) + ": input is not a valid " +
                                 std::string(to_string(g.form)) + "-form game");
}

}  // namespace sgame
