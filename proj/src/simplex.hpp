#pragma once

// Self-contained dense linear optimization for desk-scale problems in
// standard equality form: min c^T x  s.t.  Mx = b, x >= 0.
// Two-phase primal simplex, Bland's rule throughout. Works in exact rational
// or binary64 arithmetic and returns both primal and dual solutions.

#include <optional>
#include <vector>

#include "linalg.hpp"

namespace ginv {

template <class T>
struct LinearProgram {
    Matrix<T> constraint_matrix; // k x q
    std::vector<T> rhs;          // k
    std::vector<T> objective;    // q
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* lp_status_name(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

template <class T>
struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<T> primal; // q
    std::vector<T> dual;   // k, one multiplier per original equality row
    T objective_value = T(0);
};

struct SolveOptions {
    // The vectorized matrix-equation systems are massively redundant for low
    // rank; simplex needs independent rows. Selection keeps a maximal
    // independent subset of the original rows, so duals lift back with zeros.
    bool eliminate_redundant_rows = true;
    long max_iterations = 200000;
};

template <class T>
struct LPDiagnostics {
    T feasibility_residual = T(0);        // max |Mx - b|
    T duality_gap = T(0);                 // |c^T x - b^T y|
    T complementary_slackness = T(0);     // max_j |x_j * (c - M^T y)_j|
};

namespace detail {

template <class T>
class SimplexTableau {
public:
    SimplexTableau(const Matrix<T>& m, const std::vector<T>& b, const std::vector<int>& rows)
        : k_(static_cast<int>(rows.size())), q_(m.cols()) {
        tab_.assign(k_, std::vector<T>(q_ + k_ + 1, T(0)));
        basis_.resize(k_);
        for (int i = 0; i < k_; ++i) {
            const int src = rows[i];
            bool flip = b[src] < T(0);
            for (int j = 0; j < q_; ++j) tab_[i][j] = flip ? -m(src, j) : m(src, j);
            tab_[i][q_ + i] = T(1);
            tab_[i][q_ + k_] = flip ? -b[src] : b[src];
            basis_[i] = q_ + i;
        }
    }

    int rows() const { return k_; }
    int artificial_begin() const { return q_; }
    const std::vector<int>& basis() const { return basis_; }
    const T& rhs(int i) const { return tab_[i][q_ + k_]; }
    const T& at(int i, int j) const { return tab_[i][j]; }

    void pivot(int row, int col) {
        std::vector<T>& pr = tab_[row];
        T p = pr[col];
        for (auto& v : pr) v /= p;
        for (int i = 0; i < k_; ++i) {
            if (i == row) continue;
            T f = tab_[i][col];
            if (f == T(0)) continue;
            std::vector<T>& ri = tab_[i];
            for (size_t j = 0; j < ri.size(); ++j) ri[j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering = smallest eligible index; leaving = min ratio,
    // ties broken by smallest basic variable index.
    // Returns the objective value reached.
    T run(const std::vector<T>& cost, int allowed_end, const T& cost_tol,
          const T& pivot_tol, long& iterations, long max_iterations, bool* unbounded) {
        if (unbounded) *unbounded = false;
        const int width = q_ + k_;
        std::vector<T> y_row(width, T(0));
        while (true) {
            if (++iterations > max_iterations)
                raise(errc::internal_error, "simplex iteration limit exceeded");
            // reduced costs via z = sum_i cost[basis_i] * row_i
            for (auto& v : y_row) v = T(0);
            for (int i = 0; i < k_; ++i) {
                const T& cb = cost[basis_[i]];
                if (cb == T(0)) continue;
                for (int j = 0; j < width; ++j)
                    if (tab_[i][j] != T(0)) y_row[j] += cb * tab_[i][j];
            }
            int entering = -1;
            for (int j = 0; j < allowed_end; ++j) {
                T rc = cost[j] - y_row[j];
                if (rc < -cost_tol) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) break;

            int leave = -1;
            std::optional<T> best_ratio;
            for (int i = 0; i < k_; ++i) {
                const T& a = tab_[i][entering];
                if (a <= pivot_tol) continue;
                T ratio = rhs(i) / a;
                if (!best_ratio || ratio < *best_ratio ||
                    (ratio == *best_ratio && basis_[i] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                if (unbounded) *unbounded = true;
                break;
            }
            if constexpr (!scalar_traits<T>::exact) {
                if (scalar_abs(tab_[leave][entering]) < 1e-12)
                    raise(errc::numerical_breakdown, "simplex pivot below 1e-12");
            }
            pivot(leave, entering);
        }
        T obj(0);
        for (int i = 0; i < k_; ++i) obj += cost[basis_[i]] * rhs(i);
        return obj;
    }

private:
    int k_, q_;
    std::vector<std::vector<T>> tab_;
    std::vector<int> basis_;
};

// Maximal independent subset of rows of m, with a consistency check of the
// attached right-hand side (pivoting never selects the rhs column).
template <class T>
void select_rows(const Matrix<T>& m, const std::vector<T>& b,
                 std::vector<int>& kept, bool& consistent, const T& tol) {
    const int k = m.rows(), q = m.cols();
    Matrix<T> w(k, q + 1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < q; ++j) w(i, j) = m(i, j);
        w(i, q) = b[i];
    }
    std::vector<int> row_ids(k);
    for (int i = 0; i < k; ++i) row_ids[i] = i;

    kept.clear();
    int lead = 0;
    for (int step = 0; step < std::min(k, q); ++step) {
        int pi = -1, pj = -1;
        T best(0);
        for (int i = lead; i < k; ++i)
            for (int j = step; j < q; ++j) {
                T v = scalar_abs(w(i, j));
                if (v > best) { best = v; pi = i; pj = j; }
            }
        bool admissible = scalar_traits<T>::exact ? (pi >= 0 && best != T(0))
                                                  : (pi >= 0 && best > tol);
        if (!admissible) break;
        if (pi != lead) {
            for (int j = 0; j <= q; ++j) std::swap(w(lead, j), w(pi, j));
            std::swap(row_ids[lead], row_ids[pi]);
        }
        // column swap only inside the coefficient block
        if (pj != step)
            for (int i = 0; i < k; ++i) std::swap(w(i, step), w(i, pj));
        for (int i = lead + 1; i < k; ++i) {
            if (w(i, step) == T(0)) continue;
            T f = w(i, step) / w(lead, step);
            for (int j = step; j <= q; ++j) w(i, j) -= f * w(lead, j);
        }
        kept.push_back(row_ids[lead]);
        ++lead;
    }
    consistent = true;
    for (int i = lead; i < k; ++i) {
        T v = scalar_abs(w(i, q));
        bool zero = scalar_traits<T>::exact ? (v == T(0)) : (v <= (tol > T(1e-7) ? tol : T(1e-7)));
        if (!zero) { consistent = false; break; }
    }
    std::sort(kept.begin(), kept.end());
}

} // namespace detail

template <class T>
LPSolution<T> solve(const LinearProgram<T>& lp, const SolveOptions& opt = {}) {
    const Matrix<T>& m = lp.constraint_matrix;
    const int k = m.rows(), q = m.cols();
    if (static_cast<int>(lp.rhs.size()) != k || static_cast<int>(lp.objective.size()) != q)
        raise(errc::dimension_mismatch, "LP data shape mismatch");

    LPSolution<T> out;
    out.primal.assign(q, T(0));
    out.dual.assign(k, T(0));

    const T tol = default_rank_tol(m);
    std::vector<int> rows;
    if (opt.eliminate_redundant_rows) {
        bool consistent = false;
        detail::select_rows(m, lp.rhs, rows, consistent, tol);
        if (!consistent) {
            out.status = LPStatus::Infeasible;
            return out;
        }
    } else {
        rows.resize(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
    }

    detail::SimplexTableau<T> tab(m, lp.rhs, rows);
    const int kk = tab.rows();
    const T cost_tol = scalar_traits<T>::exact ? T(0) : T(1e-9);
    const T pivot_tol = scalar_traits<T>::exact ? T(0) : T(1e-11);
    long iterations = 0;

    // Phase 1: minimize the artificial sum.
    std::vector<T> phase1_cost(q + kk, T(0));
    for (int i = 0; i < kk; ++i) phase1_cost[q + i] = T(1);
    T p1 = tab.run(phase1_cost, q + kk, cost_tol, pivot_tol, iterations,
                   opt.max_iterations, nullptr);
    const T feas_tol = scalar_traits<T>::exact ? T(0) : T(1e-7);
    if (p1 > feas_tol) {
        out.status = LPStatus::Infeasible;
        return out;
    }

    // Drive leftover artificials out of the basis; a row with no admissible
    // pivot is redundant and stays inert (its multiplier is zero).
    std::vector<bool> row_active(kk, true);
    for (int i = 0; i < kk; ++i) {
        if (tab.basis()[i] < q) continue;
        int col = -1;
        for (int j = 0; j < q; ++j) {
            T v = scalar_abs(tab.at(i, j));
            bool ok = scalar_traits<T>::exact ? (v != T(0)) : (v > T(1e-11));
            if (ok) { col = j; break; }
        }
        if (col >= 0)
            tab.pivot(i, col);
        else
            row_active[i] = false;
    }

    // Phase 2: artificials excluded from entering.
    std::vector<T> phase2_cost(q + kk, T(0));
    for (int j = 0; j < q; ++j) phase2_cost[j] = lp.objective[j];
    bool unbounded = false;
    T obj = tab.run(phase2_cost, q, cost_tol, pivot_tol, iterations,
                    opt.max_iterations, &unbounded);
    if (unbounded) {
        out.status = LPStatus::Unbounded;
        return out;
    }

    for (int i = 0; i < kk; ++i)
        if (tab.basis()[i] < q) out.primal[tab.basis()[i]] = tab.rhs(i);
    out.objective_value = obj;
    out.status = LPStatus::Optimal;

    // Duals: solve B^T y = c_B over the active rows of the final basis.
    std::vector<int> act;
    for (int i = 0; i < kk; ++i)
        if (row_active[i] && tab.basis()[i] < q) act.push_back(i);
    const int na = static_cast<int>(act.size());
    if (na > 0) {
        Matrix<T> bt(na, na);
        std::vector<T> cb(na, T(0));
        for (int c = 0; c < na; ++c) {
            int var = tab.basis()[act[c]];
            for (int r = 0; r < na; ++r) bt(c, r) = m(rows[act[r]], var);
            cb[c] = lp.objective[var];
        }
        std::vector<T> y = solve_square(bt, std::span<const T>(cb));
        for (int r = 0; r < na; ++r) out.dual[rows[act[r]]] = y[r];
    }
    return out;
}

template <class T>
LPDiagnostics<T> diagnose(const LinearProgram<T>& lp, const LPSolution<T>& sol) {
    LPDiagnostics<T> d;
    if (sol.status != LPStatus::Optimal) return d;
    const Matrix<T>& m = lp.constraint_matrix;
    const int k = m.rows(), q = m.cols();
    T bty(0);
    for (int i = 0; i < k; ++i) {
        T ax(0);
        for (int j = 0; j < q; ++j) ax += m(i, j) * sol.primal[j];
        T r = scalar_abs(ax - lp.rhs[i]);
        if (r > d.feasibility_residual) d.feasibility_residual = r;
        bty += lp.rhs[i] * sol.dual[i];
    }
    T ctx(0);
    for (int j = 0; j < q; ++j) {
        ctx += lp.objective[j] * sol.primal[j];
        T red = lp.objective[j];
        for (int i = 0; i < k; ++i) red -= m(i, j) * sol.dual[i];
        T cs = scalar_abs(sol.primal[j] * red);
        if (cs > d.complementary_slackness) d.complementary_slackness = cs;
    }
    d.duality_gap = scalar_abs(ctx - bty);
    return d;
}

} // namespace ginv
