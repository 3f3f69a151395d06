#ifndef DENSEK_LP_HPP
#define DENSEK_LP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "densek/error.hpp"

namespace densek {

enum class Relation { less_equal, equal, greater_equal };

struct LpConstraint {
    std::vector<double> coeffs;
    Relation relation = Relation::less_equal;
    double rhs = 0.0;
};

/// Minimisation LP: min c.x s.t. rows, lower <= x <= upper. Lower bounds
/// must be finite; upper bounds may be +infinity.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
    std::vector<double> lower;
    std::vector<double> upper;

    static constexpr double infinity = std::numeric_limits<double>::infinity();

    std::size_t variables() const noexcept { return objective.size(); }

    std::size_t add_variable(double cost, double lo = 0.0, double hi = infinity) {
        objective.push_back(cost);
        lower.push_back(lo);
        upper.push_back(hi);
        for (auto& row : constraints) row.coeffs.push_back(0.0);
        return objective.size() - 1;
    }

    void add_constraint(std::vector<double> coeffs, Relation rel, double rhs) {
        constraints.push_back({std::move(coeffs), rel, rhs});
    }

    void validate() const {
        const auto n = variables();
        if (lower.size() != n || upper.size() != n) throw InputError("bound vector width mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(objective[j])) throw InputError("non-finite objective coefficient");
            if (!std::isfinite(lower[j])) throw InputError("lower bounds must be finite");
            if (std::isnan(upper[j]) || lower[j] > upper[j]) throw InputError("variable bounds lo > hi");
        }
        for (const auto& row : constraints) {
            if (row.coeffs.size() != n) throw InputError("constraint row width mismatch");
            if (!std::isfinite(row.rhs)) throw InputError("non-finite right-hand side");
            for (double a : row.coeffs)
                if (!std::isfinite(a)) throw InputError("non-finite constraint coefficient");
        }
    }

    /// Largest violation of any row or bound at x (0 when feasible).
    double max_violation(const std::vector<double>& x) const {
        double worst = 0.0;
        for (std::size_t j = 0; j < variables(); ++j) {
            worst = std::max(worst, lower[j] - x[j]);
            if (std::isfinite(upper[j])) worst = std::max(worst, x[j] - upper[j]);
        }
        for (const auto& row : constraints) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < variables(); ++j) lhs += row.coeffs[j] * x[j];
            double v = 0.0;
            switch (row.relation) {
                case Relation::less_equal: v = lhs - row.rhs; break;
                case Relation::greater_equal: v = row.rhs - lhs; break;
                case Relation::equal: v = std::abs(lhs - row.rhs); break;
            }
            worst = std::max(worst, v);
        }
        return worst;
    }

    double evaluate(const std::vector<double>& x) const {
        double z = 0.0;
        for (std::size_t j = 0; j < variables(); ++j) z += objective[j] * x[j];
        return z;
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline std::string_view to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t pivots = 0;
};

struct SimplexOptions {
    double feasibility_tol = 1e-9;
    double pivot_tol = 1e-10;
    /// Dantzig pivots allowed before switching to Bland's rule for good.
    std::size_t dantzig_pivots = 2000;
    std::size_t max_pivots = 200000;
};

namespace detail {

/// Dense tableau for the standard form  A x = b, x >= 0, b >= 0.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0), b_(rows, 0.0), basis_(rows, 0) {}

    double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    double& rhs(std::size_t i) { return b_[i]; }
    std::size_t& basic(std::size_t i) { return basis_[i]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Installs a cost vector and prices it out against the current basis.
    void set_costs(const std::vector<double>& c) {
        reduced_ = c;
        value_ = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double cb = c[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * at(i, j);
            value_ += cb * b_[i];
        }
    }

    double value() const { return value_; }

    void pivot(std::size_t r, std::size_t c) {
        double p = at(r, c);
        double* row = &a_[r * cols_];
        for (std::size_t j = 0; j < cols_; ++j) row[j] /= p;
        b_[r] /= p;
        row[c] = 1.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            double f = at(i, c);
            if (f == 0.0) continue;
            double* dst = &a_[i * cols_];
            for (std::size_t j = 0; j < cols_; ++j) dst[j] -= f * row[j];
            dst[c] = 0.0;
            b_[i] -= f * b_[r];
            if (b_[i] < 0.0 && b_[i] > -1e-12) b_[i] = 0.0;
        }
        double f = reduced_[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= f * row[j];
            reduced_[c] = 0.0;
            value_ += f * b_[r];
        }
        basis_[r] = c;
    }

    enum class Outcome { optimal, unbounded };

    /// Records the current basis columns; together they hold B^-1 for the
    /// lexicographic ratio test.
    void mark_initial_basis() { initial_ = basis_; }

    /// Primal simplex on the installed costs. Columns with `blocked[j]`
    /// never enter. Dantzig's rule, then Bland's once `dantzig_pivots` is
    /// used up. Ratio-test ties go to the lexicographically smallest row of
    /// B^-1 / a, which rules out cycling under either entering rule.
    Outcome optimize(const std::vector<char>& blocked, const SimplexOptions& opt,
                     std::size_t& pivots) {
        while (true) {
            bool bland = pivots >= opt.dantzig_pivots;
            std::size_t enter = cols_;
            double best = -opt.feasibility_tol;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (blocked[j] || reduced_[j] >= -opt.feasibility_tol) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (reduced_[j] < best) best = reduced_[j], enter = j;
            }
            if (enter == cols_) return Outcome::optimal;

            std::size_t leave = rows_;
            double ratio = 0.0;
            for (std::size_t i = 0; i < rows_; ++i) {
                double a = at(i, enter);
                if (a <= opt.pivot_tol) continue;
                double t = b_[i] / a;
                if (leave == rows_ || t < ratio) leave = i, ratio = t;
            }
            if (leave == rows_) return Outcome::unbounded;
            const double tie = 1e-12 * (1.0 + std::abs(ratio));
            for (std::size_t i = 0; i < rows_; ++i) {
                double a = at(i, enter);
                if (i == leave || a <= opt.pivot_tol || b_[i] / a > ratio + tie) continue;
                if (lex_less(i, leave, enter)) leave = i;
            }
            pivot(leave, enter);
            if (++pivots > opt.max_pivots)
                throw NumericalError("simplex exceeded pivot limit without converging");
        }
    }

private:
    bool lex_less(std::size_t i, std::size_t r, std::size_t enter) const {
        const double ai = at(i, enter), ar = at(r, enter);
        for (std::size_t col : initial_) {
            double x = at(i, col) / ai, y = at(r, col) / ar;
            if (x < y - 1e-12) return true;
            if (x > y + 1e-12) return false;
        }
        return basis_[i] < basis_[r];
    }

    std::size_t rows_, cols_;
    std::vector<double> a_, b_;
    std::vector<std::size_t> basis_, initial_;
    std::vector<double> reduced_;
    double value_ = 0.0;
};

}  // namespace detail

/// Two-phase dense simplex. Optimal answers are re-checked against the
/// original rows; a violation beyond tolerance throws NumericalError instead
/// of being reported as optimal.
inline LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opt = {}) {
    lp.validate();
    if (!(opt.feasibility_tol > 0.0)) throw InputError("feasibility tolerance must be positive");
    const std::size_t n = lp.variables();

    // Shift x = lower + x', collect rows including finite upper bounds.
    struct Row {
        std::vector<double> a;
        Relation rel;
        double b;
    };
    std::vector<Row> rows;
    for (const auto& c : lp.constraints) {
        double b = c.rhs;
        for (std::size_t j = 0; j < n; ++j) b -= c.coeffs[j] * lp.lower[j];
        rows.push_back({c.coeffs, c.relation, b});
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lp.upper[j])) continue;
        std::vector<double> a(n, 0.0);
        a[j] = 1.0;
        rows.push_back({std::move(a), Relation::less_equal, lp.upper[j] - lp.lower[j]});
    }
    for (auto& r : rows) {
        if (r.b < 0.0) {
            for (double& v : r.a) v = -v;
            r.b = -r.b;
            if (r.rel == Relation::less_equal) r.rel = Relation::greater_equal;
            else if (r.rel == Relation::greater_equal) r.rel = Relation::less_equal;
        }
    }

    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : rows) {
        if (r.rel != Relation::equal) ++slacks;
        if (r.rel != Relation::less_equal) ++artificials;
    }
    const std::size_t m = rows.size();
    const std::size_t cols = n + slacks + artificials;
    const std::size_t first_art = n + slacks;
    detail::Tableau t(m, cols);
    std::size_t s_col = n, a_col = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rows[i].a[j];
        t.rhs(i) = rows[i].b;
        switch (rows[i].rel) {
            case Relation::less_equal:
                t.at(i, s_col) = 1.0;
                t.basic(i) = s_col++;
                break;
            case Relation::greater_equal:
                t.at(i, s_col++) = -1.0;
                t.at(i, a_col) = 1.0;
                t.basic(i) = a_col++;
                break;
            case Relation::equal:
                t.at(i, a_col) = 1.0;
                t.basic(i) = a_col++;
                break;
        }
    }

    t.mark_initial_basis();
    LpSolution sol;
    std::vector<char> blocked(cols, 0);
    if (artificials > 0) {
        std::vector<double> phase1(cols, 0.0);
        for (std::size_t j = first_art; j < cols; ++j) phase1[j] = 1.0;
        t.set_costs(phase1);
        t.optimize(blocked, opt, sol.pivots);
        double scale = 1.0;
        for (const auto& r : rows) scale = std::max(scale, std::abs(r.b));
        if (t.value() > opt.feasibility_tol * scale) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive zero-valued artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basic(i) < first_art) continue;
            std::size_t best = cols;
            double mag = opt.pivot_tol;
            for (std::size_t j = 0; j < first_art; ++j)
                if (std::abs(t.at(i, j)) > mag) mag = std::abs(t.at(i, j)), best = j;
            if (best != cols) t.pivot(i, best);
        }
        for (std::size_t j = first_art; j < cols; ++j) blocked[j] = 1;
    }

    std::vector<double> phase2(cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
    t.set_costs(phase2);
    if (t.optimize(blocked, opt, sol.pivots) == detail::Tableau::Outcome::unbounded) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    std::vector<double> shifted(cols, 0.0);
    for (std::size_t i = 0; i < m; ++i) shifted[t.basic(i)] = t.rhs(i);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basic(i) >= first_art && std::abs(t.rhs(i)) > opt.feasibility_tol * 1e3)
            throw NumericalError("artificial variable stuck in basis at nonzero level");
    sol.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double v = lp.lower[j] + std::max(0.0, shifted[j]);
        if (std::isfinite(lp.upper[j])) v = std::min(v, lp.upper[j]);
        sol.x[j] = v;
    }

    double scale = 1.0;
    for (const auto& c : lp.constraints) scale = std::max(scale, std::abs(c.rhs));
    for (double v : sol.x) scale = std::max(scale, std::abs(v));
    double viol = lp.max_violation(sol.x);
    if (viol > opt.feasibility_tol * scale * 10.0)
        throw NumericalError("simplex basis lost feasibility (violation " + std::to_string(viol) + ")");
    sol.status = LpStatus::optimal;
    sol.objective = lp.evaluate(sol.x);
    return sol;
}

}  // namespace densek

#endif
