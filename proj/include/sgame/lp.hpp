#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgame {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

enum class relation { less_equal, equal, greater_equal };

inline std::string_view to_string(relation r) {
    switch (r) {
        case relation::less_equal: return "<=";
        case relation::equal: return "=";
        case relation::greater_equal: return ">=";
    }
    return "?";
}

struct lp_constraint {
    std::vector<rational> coeffs;  // dense, one per variable
    relation rel = relation::less_equal;
    rational rhs;
};

// A feasibility system over nonnegative variables. All arithmetic on
// the decision path is exact rational; there is no objective.
struct rational_lp {
    std::size_t num_vars = 0;
    std::vector<lp_constraint> constraints;
};

// One multiplier per constraint. Sign discipline: >= 0 on <= rows,
// <= 0 on >= rows, free on equality rows. When the combined coefficient
// of every variable is >= 0 while the combined right-hand side is < 0,
// no nonnegative point can satisfy the system.
struct farkas_certificate {
    std::vector<rational> multipliers;
};

enum class lp_status { feasible, infeasible };

struct feasibility_result {
    lp_status status = lp_status::infeasible;
    std::vector<rational> point;       // filled when feasible
    farkas_certificate certificate;    // filled when infeasible

    bool feasible() const { return status == lp_status::feasible; }
};

inline bool satisfies(const rational_lp& lp, const std::vector<rational>& x) {
    if (x.size() != lp.num_vars) return false;
    for (const rational& v : x) {
        if (v < 0) return false;
    }
    for (const lp_constraint& c : lp.constraints) {
        rational lhs = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
        switch (c.rel) {
            case relation::less_equal:
                if (lhs > c.rhs) return false;
                break;
            case relation::equal:
                if (lhs != c.rhs) return false;
                break;
            case relation::greater_equal:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    return true;
}

// Re-derives the contradiction claimed by a certificate, in exact
// arithmetic and independently of how it was produced.
inline bool verify_infeasibility(const rational_lp& lp, const farkas_certificate& cert) {
    if (cert.multipliers.size() != lp.constraints.size()) return false;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const rational& y = cert.multipliers[i];
        switch (lp.constraints[i].rel) {
            case relation::less_equal:
                if (y < 0) return false;
                break;
            case relation::greater_equal:
                if (y > 0) return false;
                break;
            case relation::equal: break;
        }
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        rational combined = 0;
        for (std::size_t i = 0; i < lp.constraints.size(); ++i)
            combined += cert.multipliers[i] * lp.constraints[i].coeffs[j];
        if (combined < 0) return false;
    }
    rational combined_rhs = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
        combined_rhs += cert.multipliers[i] * lp.constraints[i].rhs;
    return combined_rhs < 0;
}

namespace detail {

// Phase-one simplex over the equality system obtained by adding slack
// and artificial variables. Bland's rule on both the entering and the
// leaving choice guarantees termination; with exact rationals the
// verdict is never a rounding artifact.
class phase_one_simplex {
public:
    explicit phase_one_simplex(const rational_lp& lp) : lp_(lp) {
        const std::size_t m = lp.constraints.size();
        for (const lp_constraint& c : lp.constraints) {
            if (c.coeffs.size() != lp.num_vars)
                throw std::invalid_argument("lp_feasible: constraint arity mismatch");
        }
        // column layout: original | slacks | artificials
        num_slack_ = 0;
        for (const lp_constraint& c : lp.constraints) {
            if (c.rel != relation::equal) ++num_slack_;
        }
        cols_ = lp.num_vars + num_slack_ + m;
        tableau_.assign(m + 1, std::vector<rational>(cols_ + 1, rational(0)));
        basis_.resize(m);
        sign_.resize(m, 1);

        std::size_t slack_at = lp.num_vars;
        for (std::size_t i = 0; i < m; ++i) {
            const lp_constraint& c = lp.constraints[i];
            auto& row = tableau_[i];
            for (std::size_t j = 0; j < lp.num_vars; ++j) row[j] = c.coeffs[j];
            if (c.rel == relation::less_equal) row[slack_at++] = 1;
            if (c.rel == relation::greater_equal) row[slack_at++] = -1;
            row[cols_] = c.rhs;
            if (row[cols_] < 0) {
                sign_[i] = -1;
                for (auto& v : row) v = -v;
            }
            const std::size_t art = lp.num_vars + num_slack_ + i;
            row[art] = 1;
            basis_[i] = art;
        }
        // objective row: minimize the artificial total; reduced costs
        // start at c_j - sum of the column over the (all artificial) basis
        auto& obj = tableau_[m];
        for (std::size_t j = 0; j <= cols_; ++j) {
            rational colsum = 0;
            for (std::size_t i = 0; i < m; ++i) colsum += tableau_[i][j];
            const bool artificial = j >= lp.num_vars + num_slack_ && j < cols_;
            obj[j] = (artificial ? rational(1) : rational(0)) - colsum;
        }
    }

    feasibility_result run() {
        const std::size_t m = lp_.constraints.size();
        auto& obj = tableau_[m];
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (obj[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) break;
            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (tableau_[i][enter] <= 0) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                const rational lhs = tableau_[i][cols_] * tableau_[leave][enter];
                const rational rhs = tableau_[leave][cols_] * tableau_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m)
                throw std::logic_error("lp_feasible: unbounded phase-one objective");
            pivot(leave, enter);
        }

        feasibility_result result;
        const rational optimum = -obj[cols_];
        if (optimum == 0) {
            result.status = lp_status::feasible;
            result.point.assign(lp_.num_vars, rational(0));
            for (std::size_t i = 0; i < m; ++i) {
                if (basis_[i] < lp_.num_vars) result.point[basis_[i]] = tableau_[i][cols_];
            }
        } else {
            result.status = lp_status::infeasible;
            // The simplex multipliers sit in the reduced costs of the
            // artificial columns: y_i = 1 - d_art(i). Undo the row sign
            // normalization and negate to match the certificate
            // convention above.
            result.certificate.multipliers.resize(m);
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t art = lp_.num_vars + num_slack_ + i;
                const rational y = rational(1) - obj[art];
                result.certificate.multipliers[i] = -rational(sign_[i]) * y;
            }
        }
        return result;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const rational p = pr[col];
        for (auto& v : pr) v /= p;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == row) continue;
            const rational f = tableau_[i][col];
            if (f == 0) continue;
            auto& ri = tableau_[i];
            for (std::size_t j = 0; j <= cols_; ++j) ri[j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    const rational_lp& lp_;
    std::size_t num_slack_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<rational>> tableau_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
};

}  // namespace detail

// Exact feasibility of a rational system over nonnegative variables.
// Every answer ships with its own evidence: a point that is re-checked
// against all constraints, or a certificate that is re-verified before
// being returned.
inline feasibility_result lp_feasible(const rational_lp& lp) {
    detail::phase_one_simplex simplex(lp);
    feasibility_result result = simplex.run();
    if (result.feasible()) {
        if (!satisfies(lp, result.point))
            throw std::logic_error("lp_feasible: solution failed re-verification");
    } else {
        if (!verify_infeasibility(lp, result.certificate))
            throw std::logic_error("lp_feasible: certificate failed re-verification");
    }
    return result;
}

}  // namespace sgame
