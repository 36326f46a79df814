#pragma once

// Entrywise-1-norm minimization over generalized inverses:
//   P1    : min ||H||_1  s.t.  AHA = A
//   P1Sym : P1 restricted to symmetric H (symmetric A only)
//   P1P3  : min ||H||_1  s.t.  AHA = A and AH symmetric
// Each solve also recovers the multipliers of the matrix duals: W for the
// AHA = A rows and, in the P1P3 case, the skew-symmetric U = V^T - V from the
// symmetry rows.

#include <optional>

#include "simplex.hpp"

namespace ginv {

enum class Formulation { P1, P1Sym, P1P3 };

inline const char* formulation_name(Formulation f) {
    switch (f) {
        case Formulation::P1: return "p1";
        case Formulation::P1Sym: return "p1sym";
        case Formulation::P1P3: return "p1p3";
    }
    return "unknown";
}

template <class T>
struct MinNormResult {
    Matrix<T> H;
    T one_norm_value = T(0);
    Matrix<T> dual_W;                 // m x n
    std::optional<Matrix<T>> dual_U;  // m x m skew-symmetric, P1P3 only
    Formulation formulation = Formulation::P1;
    LPDiagnostics<T> lp;
};

namespace detail {

// rows of vec(AHA) = vec(A); H is n x m, vec is column-major
template <class T>
Matrix<T> p1_rows(const Matrix<T>& a) {
    return kron(a.transpose(), a);
}

// rows (AH)_{ji} - (AH)_{ij} = 0 for i < j, stacked in that order; with
// multipliers V_{ij} this yields the dual term A^T (V^T - V).
template <class T>
Matrix<T> p3_rows(const Matrix<T>& a) {
    const int m = a.rows(), n = a.cols();
    Matrix<T> s(m * (m - 1) / 2, n * m);
    int row = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++row)
            for (int k = 0; k < n; ++k) {
                s(row, i * n + k) += a(j, k); // (AH)_{ji} hits H_{k,i}
                s(row, j * n + k) -= a(i, k); // (AH)_{ij} hits H_{k,j}
            }
    return s;
}

template <class T>
LinearProgram<T> split_variables(const Matrix<T>& rows, std::vector<T> rhs) {
    const int k = rows.rows(), q = rows.cols();
    LinearProgram<T> lp;
    lp.constraint_matrix = Matrix<T>(k, 2 * q);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < q; ++j) {
            lp.constraint_matrix(i, j) = rows(i, j);
            lp.constraint_matrix(i, q + j) = -rows(i, j);
        }
    lp.rhs = std::move(rhs);
    lp.objective.assign(2 * q, T(1));
    return lp;
}

template <class T>
LPSolution<T> solve_checked(const LinearProgram<T>& lp, const SolveOptions& opt = {}) {
    LPSolution<T> sol = solve(lp, opt);
    if (sol.status != LPStatus::Optimal)
        raise(errc::internal_error,
              std::string("norm-min LP unexpectedly ") + lp_status_name(sol.status));
    return sol;
}

template <class T>
bool dual_feasible(const Matrix<T>& a, const Matrix<T>& w, const Matrix<T>* u) {
    Matrix<T> g = a.transpose() * w * a.transpose();
    if (u) g = g + a.transpose() * (*u);
    T slack = scalar_traits<T>::exact ? T(0) : T(1e-8);
    return max_norm(g) <= T(1) + slack;
}

} // namespace detail

template <class T>
MinNormResult<T> min_norm_p1(const Matrix<T>& a);

template <class T>
MinNormResult<T> min_norm_p1_p3(const Matrix<T>& a);

namespace detail {

template <class T>
MinNormResult<T> min_norm_p1_impl(const Matrix<T>& a, const SolveOptions& opt) {
    const int m = a.rows(), n = a.cols();
    Matrix<T> rows = p1_rows(a);
    LinearProgram<T> lp = split_variables(rows, a.vec());
    LPSolution<T> sol = solve_checked(lp, opt);

    const int q = n * m;
    std::vector<T> h(q);
    for (int t = 0; t < q; ++t) h[t] = sol.primal[t] - sol.primal[q + t];

    MinNormResult<T> out;
    out.H = Matrix<T>::unvec(h, n, m);
    out.one_norm_value = sol.objective_value;
    out.dual_W = Matrix<T>::unvec(sol.dual, m, n);
    out.formulation = Formulation::P1;
    out.lp = diagnose(lp, sol);
    return out;
}

template <class T>
MinNormResult<T> min_norm_p1_p3_impl(const Matrix<T>& a, const SolveOptions& opt) {
    const int m = a.rows(), n = a.cols();
    Matrix<T> kr = p1_rows(a);
    Matrix<T> sr = p3_rows(a);
    const int k1 = kr.rows(), k2 = sr.rows();
    Matrix<T> rows(k1 + k2, n * m);
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < n * m; ++j) rows(i, j) = kr(i, j);
    for (int i = 0; i < k2; ++i)
        for (int j = 0; j < n * m; ++j) rows(k1 + i, j) = sr(i, j);
    std::vector<T> rhs = a.vec();
    rhs.resize(k1 + k2, T(0));

    LinearProgram<T> lp = split_variables(rows, std::move(rhs));
    LPSolution<T> sol = solve_checked(lp, opt);

    const int q = n * m;
    std::vector<T> h(q);
    for (int t = 0; t < q; ++t) h[t] = sol.primal[t] - sol.primal[q + t];

    MinNormResult<T> out;
    out.H = Matrix<T>::unvec(h, n, m);
    out.one_norm_value = sol.objective_value;
    out.dual_W = Matrix<T>::unvec(std::span<const T>(sol.dual).subspan(0, k1), m, n);
    Matrix<T> v(m, m);
    int row = k1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++row) v(i, j) = sol.dual[row];
    out.dual_U = v.transpose() - v;
    out.formulation = Formulation::P1P3;
    out.lp = diagnose(lp, sol);
    return out;
}

// Float-mode dual lifting is verified, not assumed: on failure the solve is
// rerun in exact arithmetic without row elimination and converted back.
template <class T, class Impl, class ExactRerun>
MinNormResult<T> with_dual_fallback(const Matrix<T>& a, Impl impl, ExactRerun rerun) {
    MinNormResult<T> r = impl(a, SolveOptions{});
    if constexpr (scalar_traits<T>::exact) {
        return r;
    } else {
        const Matrix<T>* u = r.dual_U ? &*r.dual_U : nullptr;
        if (dual_feasible(a, r.dual_W, u)) return r;
        return rerun(a);
    }
}

} // namespace detail

template <class T>
MinNormResult<T> min_norm_p1(const Matrix<T>& a) {
    if (a.is_zero()) raise(errc::degenerate_input, "zero matrix has no informative inverse");
    if constexpr (scalar_traits<T>::exact) {
        return detail::min_norm_p1_impl(a, SolveOptions{});
    } else {
        return detail::with_dual_fallback(
            a, [](const Matrix<T>& x, const SolveOptions& o) { return detail::min_norm_p1_impl(x, o); },
            [](const Matrix<T>& x) {
                Matrix<Rational> xr = matrix_cast<Rational>(x);
                SolveOptions opt;
                opt.eliminate_redundant_rows = false;
                MinNormResult<Rational> er = detail::min_norm_p1_impl(xr, opt);
                MinNormResult<T> out;
                out.H = matrix_cast<double>(er.H);
                out.one_norm_value = to_double(er.one_norm_value);
                out.dual_W = matrix_cast<double>(er.dual_W);
                out.formulation = er.formulation;
                out.lp = LPDiagnostics<T>{to_double(er.lp.feasibility_residual),
                                          to_double(er.lp.duality_gap),
                                          to_double(er.lp.complementary_slackness)};
                return out;
            });
    }
}

template <class T>
MinNormResult<T> min_norm_p1_symmetric(const Matrix<T>& a) {
    if (!a.is_symmetric()) raise(errc::not_symmetric, "P1Sym needs a symmetric matrix");
    if (a.is_zero()) raise(errc::degenerate_input, "zero matrix has no informative inverse");
    const int n = a.rows();
    Matrix<T> kr = detail::p1_rows(a);

    // Symmetry by variable identification: one +/- pair per unordered entry
    // pair; off-diagonal pairs weigh 2 in the objective so the value is still
    // ||H||_1 over all n^2 entries.
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) pairs.emplace_back(i, j);
    const int p = static_cast<int>(pairs.size());

    LinearProgram<T> lp;
    lp.constraint_matrix = Matrix<T>(kr.rows(), 2 * p);
    lp.objective.assign(2 * p, T(1));
    for (int c = 0; c < p; ++c) {
        auto [i, j] = pairs[c];
        for (int r = 0; r < kr.rows(); ++r) {
            T v = kr(r, j * n + i);
            if (i != j) v += kr(r, i * n + j);
            lp.constraint_matrix(r, c) = v;
            lp.constraint_matrix(r, p + c) = -v;
        }
        if (i != j) {
            lp.objective[c] = T(2);
            lp.objective[p + c] = T(2);
        }
    }
    lp.rhs = a.vec();

    LPSolution<T> sol = detail::solve_checked(lp);
    MinNormResult<T> out;
    out.H = Matrix<T>(n, n);
    for (int c = 0; c < p; ++c) {
        auto [i, j] = pairs[c];
        T v = sol.primal[c] - sol.primal[p + c];
        out.H(i, j) = v;
        out.H(j, i) = v;
    }
    out.one_norm_value = sol.objective_value;
    out.dual_W = Matrix<T>::unvec(sol.dual, n, n);
    out.formulation = Formulation::P1Sym;
    out.lp = diagnose(lp, sol);
    return out;
}

template <class T>
MinNormResult<T> min_norm_p1_p3(const Matrix<T>& a) {
    if (a.is_zero()) raise(errc::degenerate_input, "zero matrix has no informative inverse");
    if constexpr (scalar_traits<T>::exact) {
        return detail::min_norm_p1_p3_impl(a, SolveOptions{});
    } else {
        return detail::with_dual_fallback(
            a,
            [](const Matrix<T>& x, const SolveOptions& o) { return detail::min_norm_p1_p3_impl(x, o); },
            [](const Matrix<T>& x) {
                Matrix<Rational> xr = matrix_cast<Rational>(x);
                SolveOptions opt;
                opt.eliminate_redundant_rows = false;
                MinNormResult<Rational> er = detail::min_norm_p1_p3_impl(xr, opt);
                MinNormResult<T> out;
                out.H = matrix_cast<double>(er.H);
                out.one_norm_value = to_double(er.one_norm_value);
                out.dual_W = matrix_cast<double>(er.dual_W);
                out.dual_U = matrix_cast<double>(*er.dual_U);
                out.formulation = er.formulation;
                out.lp = LPDiagnostics<T>{to_double(er.lp.feasibility_residual),
                                          to_double(er.lp.duality_gap),
                                          to_double(er.lp.complementary_slackness)};
                return out;
            });
    }
}

} // namespace ginv
