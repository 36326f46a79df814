#pragma once

// Dense row-major matrix over an exact rational or binary64 scalar.
// Desk-scale by design: no sparse storage, no views.

#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace ginv {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, T(0)) {
        if (rows < 0 || cols < 0) raise(errc::bad_argument, "negative matrix dimension");
    }

    Matrix(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            raise(errc::bad_argument, "entry count does not match dimensions");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        entries_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                raise(errc::bad_argument, "ragged initializer");
            for (const auto& x : r) entries_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix I(n, n);
        for (int i = 0; i < n; ++i) I(i, i) = T(1);
        return I;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const T> data() const { return entries_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k)
            out.entries_[k] = a.entries_[k] + b.entries_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k)
            out.entries_[k] = a.entries_[k] - b.entries_[k];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            raise(errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = s * a.entries_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (x != T(0)) return false;
        return true;
    }

    Matrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const {
        Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (size_t i = 0; i < row_idx.size(); ++i)
            for (size_t j = 0; j < col_idx.size(); ++j)
                out(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    Matrix select_columns(std::span<const int> col_idx) const {
        std::vector<int> all(rows_);
        for (int i = 0; i < rows_; ++i) all[i] = i;
        return submatrix(all, col_idx);
    }

    Matrix column(int j) const {
        int idx[1] = {j};
        return select_columns(std::span<const int>(idx, 1));
    }

    // column-major vectorization
    std::vector<T> vec() const {
        std::vector<T> v;
        v.reserve(entries_.size());
        for (int j = 0; j < cols_; ++j)
            for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    static Matrix unvec(std::span<const T> v, int rows, int cols) {
        if (static_cast<int>(v.size()) != rows * cols)
            raise(errc::dimension_mismatch, "unvec length mismatch");
        Matrix out(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) out(i, j) = v[static_cast<size_t>(j) * rows + i];
        return out;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            raise(errc::dimension_mismatch, "matrix shapes differ");
    }

    int rows_, cols_;
    std::vector<T> entries_;
};

template <class T>
T dot(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        raise(errc::dimension_mismatch, "dot product shape mismatch");
    T acc(0);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) acc += x(i, j) * y(i, j);
    return acc;
}

template <class T>
Matrix<T> kron(const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            const T& s = x(i, j);
            if (s == T(0)) continue;
            for (int p = 0; p < y.rows(); ++p)
                for (int q = 0; q < y.cols(); ++q)
                    out(i * y.rows() + p, j * y.cols() + q) = s * y(p, q);
        }
    return out;
}

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& a) {
    Matrix<To> out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if constexpr (std::is_same_v<To, double>)
                out(i, j) = to_double(a(i, j));
            else
                out(i, j) = To(a(i, j)); // double -> rational is exact
        }
    return out;
}

} // namespace ginv
