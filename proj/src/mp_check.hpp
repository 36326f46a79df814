#pragma once

// Verification of the four Moore-Penrose properties and reflexivity of a
// candidate inverse H against A. Residuals are entrywise max-norms; the
// reflexive flag uses the rank criterion rank(H) = rank(A), which is robust
// where float-mode (P2) residuals are not.

#include <optional>

#include "linalg.hpp"

namespace ginv {

template <class T>
struct MPReport {
    T p1_residual = T(0);          // max|AHA - A|
    T p2_residual = T(0);          // max|HAH - H|
    T p3_residual = T(0);          // max|(AH)^T - AH|
    T p4_residual = T(0);          // max|(HA)^T - HA|
    std::optional<T> h_symmetric_residual; // max|H - H^T|, square H only
    int rank_A = 0;
    int rank_H = 0;
    bool reflexive = false;
};

template <class T>
void require_inverse_shape(const Matrix<T>& a, const Matrix<T>& h) {
    if (h.rows() != a.cols() || h.cols() != a.rows())
        raise(errc::dimension_mismatch, "candidate inverse must be cols(A) x rows(A)");
}

template <class T>
MPReport<T> check_mp(const Matrix<T>& a, const Matrix<T>& h, const T& tol) {
    require_inverse_shape(a, h);
    MPReport<T> r;
    Matrix<T> ah = a * h;
    Matrix<T> ha = h * a;
    r.p1_residual = max_norm(ah * a - a);
    r.p2_residual = max_norm(ha * h - h);
    r.p3_residual = max_norm(ah.transpose() - ah);
    r.p4_residual = max_norm(ha.transpose() - ha);
    if (h.rows() == h.cols()) r.h_symmetric_residual = max_norm(h.transpose() - h);
    r.rank_A = rank_of(a);
    r.rank_H = rank_of(h);
    r.reflexive = r.p1_residual <= tol && r.rank_A == r.rank_H;
    return r;
}

template <class T>
MPReport<T> check_mp(const Matrix<T>& a, const Matrix<T>& h) {
    return check_mp(a, h, default_check_tol<T>());
}

template <class T>
bool is_generalized_inverse(const Matrix<T>& a, const Matrix<T>& h, const T& tol) {
    require_inverse_shape(a, h);
    return max_norm(a * h * a - a) <= tol;
}

template <class T>
bool is_ah_symmetric(const Matrix<T>& a, const Matrix<T>& h, const T& tol) {
    require_inverse_shape(a, h);
    Matrix<T> ah = a * h;
    return max_norm(ah.transpose() - ah) <= tol;
}

} // namespace ginv
