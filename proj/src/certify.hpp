#pragma once

// Closed-form dual certificates for block solutions and the rank-2
// ah-symmetric technical conditions. A certificate (W, optional skew U) with
// max_violation = 0 and <A,W> equal to a feasible candidate's 1-norm proves
// 1-norm optimality by weak duality.

#include <optional>
#include <vector>

#include "linalg.hpp"
#include "norm_min.hpp"

namespace ginv {

template <class T>
struct DualCertificate {
    Matrix<T> W;                 // m x n
    std::optional<Matrix<T>> U;  // m x m, U^T = -U, ah-symmetric case only
    T objective = T(0);          // <A, W>
    T max_violation = T(0);      // max(0, ||A^T W A^T (+ A^T U)||_max - 1)
};

template <class T>
struct ColumnCondition {
    int column = 0; // 0-based
    T alpha = T(0);
    T beta = T(0);
    bool case_i = false;
    bool case_ii = false;
    bool case_iii = false;
};

template <class T>
struct ConditionReport {
    std::vector<ColumnCondition<T>> columns;
    bool sign_pattern_opposite = false; // Hhat_{1j} Hhat_{2j} <= 0 for all j
    bool sign_pattern_aligned = false;  // Hhat_{1j} Hhat_{2j} >= 0 for all j
    bool all_columns_pass = false;
};

template <class T>
T verify_certificate(const Matrix<T>& a, const DualCertificate<T>& cert,
                     Formulation formulation) {
    if (cert.W.rows() != a.rows() || cert.W.cols() != a.cols())
        raise(errc::dimension_mismatch, "certificate W must match A's shape");
    Matrix<T> g = a.transpose() * cert.W * a.transpose();
    if (formulation == Formulation::P1P3 && cert.U) {
        if (cert.U->rows() != a.rows() || cert.U->cols() != a.rows())
            raise(errc::dimension_mismatch, "certificate U must be rows(A) square");
        g = g + a.transpose() * (*cert.U);
    }
    T v = max_norm(g) - T(1);
    return v > T(0) ? v : T(0);
}

namespace detail {

template <class T>
DualCertificate<T> finish_certificate(const Matrix<T>& a, Matrix<T> w,
                                      std::optional<Matrix<std::type_identity_t<T>>> u,
                                      Formulation f) {
    DualCertificate<T> cert;
    cert.W = std::move(w);
    cert.U = std::move(u);
    cert.objective = dot(a, cert.W);
    cert.max_violation = verify_certificate(a, cert, f);
    return cert;
}

template <class T>
T column_pinv_norm(const Matrix<T>& a, int j) {
    // ||a_j^+||_1 = ||a_j||_1 / (a_j^T a_j) for a nonzero column
    T norm1(0), gram(0);
    for (int i = 0; i < a.rows(); ++i) {
        norm1 += scalar_abs(a(i, j));
        gram += a(i, j) * a(i, j);
    }
    if (gram == T(0)) raise(errc::bad_argument, "zero column has no pseudoinverse");
    return norm1 / gram;
}

} // namespace detail

// Rank-1 symmetric certificate: for A = uu^T the block at the largest
// diagonal entry is tight, W = e e^T / a_{i*i*}^2 with <A,W> = 1/a_{i*i*}.
template <class T>
DualCertificate<T> cert_rank1_symmetric(const Matrix<T>& a) {
    if (!a.is_symmetric()) raise(errc::not_psd, "matrix is not symmetric");
    if (rank_of(a) != 1) raise(errc::not_rank_one, "matrix does not have rank 1");
    int best = 0;
    for (int i = 1; i < a.rows(); ++i)
        if (scalar_abs(a(i, i)) > scalar_abs(a(best, best))) best = i;
    if (!(a(best, best) > T(0)))
        raise(errc::not_psd,
              "rank-1 symmetric matrix is negative semidefinite; certify via LP instead");

    Matrix<T> w(a.rows(), a.cols());
    w(best, best) = T(1) / (a(best, best) * a(best, best));
    return detail::finish_certificate(a, std::move(w), std::nullopt, Formulation::P1);
}

// Rank-2 nonnegative symmetric certificate over the minimizing principal
// block: W[S] = Ablock^{-T} M Ablock^{-T}, M = 2I - J or J - 2I by det sign.
template <class T>
DualCertificate<T> cert_rank2_symmetric_nonneg(const Matrix<T>& a, std::span<const int> s_in) {
    if (!a.is_symmetric()) raise(errc::not_symmetric, "matrix is not symmetric");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) < T(0)) raise(errc::not_nonnegative, "matrix has negative entries");
    if (rank_of(a) != 2) raise(errc::not_rank_two, "matrix does not have rank 2");
    std::vector<int> s(s_in.begin(), s_in.end());
    std::sort(s.begin(), s.end());
    if (s.size() != 2 || s[0] == s[1] || s[0] < 0 || s[1] >= a.rows())
        raise(errc::bad_argument, "S must be a pair of distinct indices");

    // minimality of ||A[S]^{-1}||_1 over all nonsingular 2x2 principal blocks
    std::optional<T> best;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.rows(); ++j) {
            T det = a(i, i) * a(j, j) - a(i, j) * a(j, i);
            if (det == T(0)) continue;
            T norm = (scalar_abs(a(i, i)) + scalar_abs(a(j, j)) + scalar_abs(a(i, j)) +
                      scalar_abs(a(j, i))) /
                     scalar_abs(det);
            if (!best || norm < *best) best = norm;
        }
    T det = a(s[0], s[0]) * a(s[1], s[1]) - a(s[0], s[1]) * a(s[1], s[0]);
    if (det == T(0)) raise(errc::block_not_minimal, "A[S] is singular");
    Matrix<T> block = a.submatrix(s, s);
    Matrix<T> inv = invert_small(block);
    if (best && one_norm(inv) != *best)
        raise(errc::block_not_minimal, "S does not minimize ||A[S]^{-1}||_1");

    Matrix<T> mm = det > T(0) ? Matrix<T>{{T(1), T(-1)}, {T(-1), T(1)}}
                              : Matrix<T>{{T(-1), T(1)}, {T(1), T(-1)}};
    Matrix<T> invt = inv.transpose();
    Matrix<T> wblock = invt * mm * invt;
    Matrix<T> w(a.rows(), a.cols());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w(s[i], s[j]) = wblock(i, j);
    return detail::finish_certificate(a, std::move(w), std::nullopt, Formulation::P1);
}

// Rank-1 ah-symmetric certificate from the explicit (w-hat, U) formulas.
// Column j must minimize ||a_j^+||_1 among nonzero columns and a(i,j) != 0.
template <class T>
DualCertificate<T> cert_rank1_ah(const Matrix<T>& a, int j, int i) {
    if (rank_of(a) != 1) raise(errc::not_rank_one, "matrix does not have rank 1");
    if (j < 0 || j >= a.cols() || i < 0 || i >= a.rows())
        raise(errc::bad_argument, "index out of range");
    if (a(i, j) == T(0)) raise(errc::zero_pivot, "pivot entry a(i,j) is zero");

    std::optional<T> best;
    for (int c = 0; c < a.cols(); ++c) {
        bool nonzero = false;
        for (int r = 0; r < a.rows(); ++r)
            if (a(r, c) != T(0)) { nonzero = true; break; }
        if (!nonzero) continue;
        T v = detail::column_pinv_norm(a, c);
        if (!best || v < *best) best = v;
    }
    T chosen = detail::column_pinv_norm(a, j);
    if (best && chosen != *best)
        raise(errc::column_not_minimal, "column j does not minimize ||a_j^+||_1");

    // ahat^+ = ahat^T / (ahat^T ahat);  z = sign(ahat^+)
    T gram(0);
    for (int r = 0; r < a.rows(); ++r) gram += a(r, j) * a(r, j);
    const T& pivot = a(i, j);
    T what = chosen / pivot; // (1/ahat_i) z (ahat^+)^T = ||ahat^+||_1 / ahat_i

    Matrix<T> w(a.rows(), a.cols());
    w(i, j) = what;
    Matrix<T> u(a.rows(), a.rows());
    for (int k = 0; k < a.rows(); ++k) {
        if (k == i) continue;
        T zk = T(scalar_sign(a(k, j)));
        T uki = (a(k, j) * chosen - zk) / pivot;
        u(k, i) = uki;
        u(i, k) = -uki;
    }
    return detail::finish_certificate(a, std::move(w), std::move(u), Formulation::P1P3);
}

// General-rank (W, U): solves the consistent underdetermined linear system
// Ahat^T W A^T + Ahat^T U = Z, Z = sign(Ahat^+), by the least-norm solution
// over the entries of W and the strict upper triangle of U. <A,W> then equals
// ||Ahat^+||_1 automatically; feasibility of the remaining rows of the dual is
// reported via max_violation, not guaranteed.
template <class T>
DualCertificate<T> solve_wu_certificate(const Matrix<T>& a, std::span<const int> t_in) {
    std::vector<int> t(t_in.begin(), t_in.end());
    std::sort(t.begin(), t.end());
    const int m = a.rows(), n = a.cols(), r = static_cast<int>(t.size());
    if (r == 0 || r > n) raise(errc::bad_argument, "invalid column set");
    Matrix<T> ahat = a.select_columns(t);
    Matrix<T> hhat = pinv_full_col_rank(ahat); // throws rank_deficient if not full rank

    Matrix<T> z(r, m);
    for (int s = 0; s < r; ++s)
        for (int c = 0; c < m; ++c) z(s, c) = T(scalar_sign(hhat(s, c)));

    const int nw = m * n;
    const int nu = m * (m - 1) / 2;
    auto u_index = [m](int k, int l) { // k < l
        return k * (2 * m - k - 1) / 2 + (l - k - 1);
    };
    Matrix<T> sys(r * m, nw + nu);
    std::vector<T> rhs(r * m);
    int row = 0;
    for (int s = 0; s < r; ++s)
        for (int c = 0; c < m; ++c, ++row) {
            for (int k = 0; k < m; ++k) {
                if (ahat(k, s) == T(0)) continue;
                for (int l = 0; l < n; ++l)
                    if (a(c, l) != T(0)) sys(row, k * n + l) += ahat(k, s) * a(c, l);
                if (k < c)
                    sys(row, nw + u_index(k, c)) += ahat(k, s);
                else if (k > c)
                    sys(row, nw + u_index(c, k)) -= ahat(k, s);
            }
            rhs[row] = z(s, c);
        }

    // least-norm solution on an independent row subset, then full re-check
    RankFactorization rf = rank_factorize(sys);
    std::vector<int> rows_kept = rf.row_basis;
    std::sort(rows_kept.begin(), rows_kept.end());
    const int kk = static_cast<int>(rows_kept.size());
    Matrix<T> gram(kk, kk);
    std::vector<T> dsel(kk);
    for (int i2 = 0; i2 < kk; ++i2) {
        dsel[i2] = rhs[rows_kept[i2]];
        for (int j2 = 0; j2 < kk; ++j2) {
            T acc(0);
            for (int c = 0; c < nw + nu; ++c)
                acc += sys(rows_kept[i2], c) * sys(rows_kept[j2], c);
            gram(i2, j2) = acc;
        }
    }
    std::vector<T> y = solve_square(gram, std::span<const T>(dsel));
    std::vector<T> x(nw + nu, T(0));
    for (int c = 0; c < nw + nu; ++c)
        for (int i2 = 0; i2 < kk; ++i2) x[c] += sys(rows_kept[i2], c) * y[i2];

    const T tol = scalar_traits<T>::exact ? T(0) : T(1e-7);
    for (int i2 = 0; i2 < r * m; ++i2) {
        T acc(0);
        for (int c = 0; c < nw + nu; ++c)
            if (x[c] != T(0)) acc += sys(i2, c) * x[c];
        if (scalar_abs(acc - rhs[i2]) > tol)
            raise(errc::internal_error, "W/U equality system unexpectedly inconsistent");
    }

    Matrix<T> w(m, n);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) w(k, l) = x[k * n + l];
    Matrix<T> u(m, m);
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            u(k, l) = x[nw + u_index(k, l)];
            u(l, k) = -u(k, l);
        }
    return detail::finish_certificate(a, std::move(w), std::move(u), Formulation::P1P3);
}

// Per-column (alpha, beta) coordinates in the basis of the chosen columns and
// the three technical conditions. all_columns_pass certifies optimality of the
// minimizing column block when T was obtained from the block search.
template <class T>
ConditionReport<T> check_rank2_ah_conditions(const Matrix<T>& a, std::span<const int> t_in) {
    std::vector<int> t(t_in.begin(), t_in.end());
    std::sort(t.begin(), t.end());
    if (t.size() != 2) raise(errc::bad_argument, "T must be a pair of column indices");
    if (rank_of(a) != 2) raise(errc::not_rank_two, "matrix does not have rank 2");
    Matrix<T> ahat = a.select_columns(t);
    Matrix<T> hhat;
    try {
        hhat = pinv_full_col_rank(ahat);
    } catch (const GinvError& e) {
        if (e.code() == errc::rank_deficient)
            raise(errc::not_rank_two, "chosen columns are linearly dependent");
        throw;
    }

    const T sign_tol = scalar_traits<T>::exact ? T(0) : T(1e-9);
    ConditionReport<T> rep;
    rep.sign_pattern_opposite = true;
    rep.sign_pattern_aligned = true;
    for (int c = 0; c < a.rows(); ++c) {
        T prod = hhat(0, c) * hhat(1, c);
        if (prod > sign_tol) rep.sign_pattern_opposite = false;
        if (prod < -sign_tol) rep.sign_pattern_aligned = false;
    }

    rep.all_columns_pass = true;
    for (int c = 0; c < a.cols(); ++c) {
        ColumnCondition<T> cc;
        cc.column = c;
        // unique coordinates: [alpha; beta] = Ahat^+ b
        cc.alpha = T(0);
        cc.beta = T(0);
        for (int i = 0; i < a.rows(); ++i) {
            cc.alpha += hhat(0, i) * a(i, c);
            cc.beta += hhat(1, i) * a(i, c);
        }
        for (int i = 0; i < a.rows(); ++i) {
            T recon = cc.alpha * ahat(i, 0) + cc.beta * ahat(i, 1);
            if (scalar_abs(recon - a(i, c)) > sign_tol)
                raise(errc::not_rank_two, "column outside the span of the chosen pair");
        }
        cc.case_i = scalar_abs(cc.alpha) + scalar_abs(cc.beta) <= T(1) + sign_tol;
        T ab = cc.alpha * cc.beta;
        cc.case_ii = rep.sign_pattern_opposite && ab >= -sign_tol;
        cc.case_iii = rep.sign_pattern_aligned && ab <= sign_tol;
        if (!(cc.case_i || cc.case_ii || cc.case_iii)) rep.all_columns_pass = false;
        rep.columns.push_back(std::move(cc));
    }
    return rep;
}

} // namespace ginv
