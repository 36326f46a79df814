#pragma once

// Dense linear algebra primitives: rank via complete-pivoting elimination,
// small-matrix inversion, Gram-form pseudoinverse of full-column-rank blocks,
// entrywise norms.

#include <algorithm>
#include <vector>

#include "matrix.hpp"

namespace ginv {

template <class T>
T one_norm(const Matrix<T>& a) {
    T acc(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += scalar_abs(a(i, j));
    return acc;
}

template <class T>
T max_norm(const Matrix<T>& a) {
    T best(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            T v = scalar_abs(a(i, j));
            if (v > best) best = v;
        }
    return best;
}

// Default pivot threshold for numerical rank: relative to the largest entry.
// Exact mode uses exact zero tests.
template <class T>
T default_rank_tol(const Matrix<T>& a) {
    if constexpr (scalar_traits<T>::exact)
        return T(0);
    else
        return 1e-9 * max_norm(a);
}

struct RankFactorization {
    int rank = 0;
    std::vector<int> row_basis; // original row indices, one per pivot
    std::vector<int> col_basis; // original column indices, one per pivot
    double tolerance_used = 0.0;
};

// Complete-pivoting Gaussian elimination. Pivots with magnitude > tol count
// toward the rank (float); exact mode accepts any nonzero pivot. The returned
// bases index a nonsingular rank x rank submatrix of A.
template <class T>
RankFactorization rank_factorize(const Matrix<T>& a, const T& tol) {
    Matrix<T> w = a;
    const int m = w.rows(), n = w.cols();
    std::vector<int> row_ids(m), col_ids(n);
    for (int i = 0; i < m; ++i) row_ids[i] = i;
    for (int j = 0; j < n; ++j) col_ids[j] = j;

    RankFactorization out;
    out.tolerance_used = to_double(tol);
    const int steps = std::min(m, n);
    for (int k = 0; k < steps; ++k) {
        int pi = -1, pj = -1;
        T best(0);
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j) {
                T v = scalar_abs(w(i, j));
                if (v > best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        bool admissible = scalar_traits<T>::exact ? (pi >= 0 && best != T(0))
                                                  : (pi >= 0 && best > tol);
        if (!admissible) break;

        if (pi != k)
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(pi, j));
        if (pj != k)
            for (int i = 0; i < m; ++i) std::swap(w(i, k), w(i, pj));
        std::swap(row_ids[k], row_ids[pi]);
        std::swap(col_ids[k], col_ids[pj]);

        for (int i = k + 1; i < m; ++i) {
            if (w(i, k) == T(0)) continue;
            T f = w(i, k) / w(k, k);
            w(i, k) = T(0);
            for (int j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
        }
        out.row_basis.push_back(row_ids[k]);
        out.col_basis.push_back(col_ids[k]);
        ++out.rank;
    }
    return out;
}

template <class T>
RankFactorization rank_factorize(const Matrix<T>& a) {
    return rank_factorize(a, default_rank_tol(a));
}

template <class T>
int rank_of(const Matrix<T>& a) {
    return rank_factorize(a).rank;
}

// Gauss-Jordan inverse with complete pivoting; throws singular_matrix when no
// admissible pivot remains.
template <class T>
Matrix<T> invert_small(const Matrix<T>& a) {
    if (a.rows() != a.cols())
        raise(errc::dimension_mismatch, "inverse of non-square matrix");
    const int n = a.rows();
    Matrix<T> w = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    std::vector<int> col_perm(n);
    for (int j = 0; j < n; ++j) col_perm[j] = j;
    const T tol = default_rank_tol(a);

    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        T best(0);
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                T v = scalar_abs(w(i, j));
                if (v > best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        bool admissible = scalar_traits<T>::exact ? (pi >= 0 && best != T(0))
                                                  : (pi >= 0 && best > tol);
        if (!admissible) raise(errc::singular_matrix, "matrix is singular");
        if (pi != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w(k, j), w(pi, j));
                std::swap(inv(k, j), inv(pi, j));
            }
        if (pj != k) {
            for (int i = 0; i < n; ++i) std::swap(w(i, k), w(i, pj));
            std::swap(col_perm[k], col_perm[pj]);
        }
        T p = w(k, k);
        for (int j = 0; j < n; ++j) {
            w(k, j) /= p;
            inv(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w(i, k) == T(0)) continue;
            T f = w(i, k);
            for (int j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    // undo column permutation: permuted variable col_perm[k] holds row k
    Matrix<T> out(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out(col_perm[k], j) = inv(k, j);
    return out;
}

// Pseudoinverse of a full-column-rank block: (A^T A)^{-1} A^T.
template <class T>
Matrix<T> pinv_full_col_rank(const Matrix<T>& ahat) {
    if (ahat.rows() == 0 || ahat.cols() == 0)
        raise(errc::bad_argument, "empty block");
    if (rank_of(ahat) != ahat.cols())
        raise(errc::rank_deficient, "block does not have full column rank");
    Matrix<T> at = ahat.transpose();
    Matrix<T> gram = at * ahat;
    return invert_small(gram) * at;
}

// Solves the square system Ax = b for one right-hand side.
template <class T>
std::vector<T> solve_square(const Matrix<T>& a, std::span<const T> b) {
    if (a.rows() != a.cols() || a.rows() != static_cast<int>(b.size()))
        raise(errc::dimension_mismatch, "square solve shape mismatch");
    Matrix<T> inv = invert_small(a);
    std::vector<T> x(b.size(), T(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) x[i] += inv(i, j) * b[j];
    return x;
}

} // namespace ginv
