#pragma once

// Structured sparse reflexive generalized inverses built from blocks:
//  - symmetric block solutions: H zero except H[S] = A[S]^{-1} for a
//    nonsingular principal r x r submatrix of a symmetric A;
//  - column block solutions: H zero except rows T, which hold A[:,T]^+.

#include <algorithm>
#include <variant>
#include <vector>

#include "linalg.hpp"

namespace ginv {

struct SymmetricBlockTag {
    std::vector<int> indices; // S, sorted
};
struct ColumnBlockTag {
    std::vector<int> indices; // T, sorted
};
struct LPTag {
    std::string formulation;
};
using Provenance = std::variant<SymmetricBlockTag, ColumnBlockTag, LPTag>;

template <class T>
struct GinvSolution {
    Matrix<T> H;
    Provenance provenance;
    T one_norm_value = T(0);
};

namespace detail {

inline std::vector<int> normalized_indices(std::span<const int> idx, int bound,
                                           const char* what) {
    std::vector<int> s(idx.begin(), idx.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        raise(errc::bad_argument, std::string("duplicate index in ") + what);
    if (!s.empty() && (s.front() < 0 || s.back() >= bound))
        raise(errc::bad_argument, std::string("index out of range in ") + what);
    return s;
}

} // namespace detail

template <class T>
GinvSolution<T> symmetric_block(const Matrix<T>& a, std::span<const int> s_in) {
    if (!a.is_symmetric()) raise(errc::not_symmetric, "symmetric block needs a symmetric matrix");
    std::vector<int> s = detail::normalized_indices(s_in, a.rows(), "S");
    const int r = rank_of(a);
    if (static_cast<int>(s.size()) != r)
        raise(errc::wrong_block_size, "|S| must equal rank(A)");

    Matrix<T> block = a.submatrix(s, s);
    Matrix<T> inv;
    try {
        inv = invert_small(block);
    } catch (const GinvError& e) {
        if (e.code() == errc::singular_matrix)
            raise(errc::singular_block, "principal submatrix A[S] is singular");
        throw;
    }
    GinvSolution<T> out;
    out.H = Matrix<T>(a.rows(), a.rows());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.H(s[i], s[j]) = inv(i, j);
    out.provenance = SymmetricBlockTag{s};
    out.one_norm_value = one_norm(out.H);
    return out;
}

// T is normalized to sorted order: the embedded H is invariant under
// reordering of the chosen columns.
template <class T>
GinvSolution<T> column_block(const Matrix<T>& a, std::span<const int> t_in) {
    std::vector<int> t = detail::normalized_indices(t_in, a.cols(), "T");
    const int r = rank_of(a);
    if (static_cast<int>(t.size()) != r)
        raise(errc::wrong_block_size, "|T| must equal rank(A)");

    Matrix<T> ahat = a.select_columns(t);
    Matrix<T> hhat;
    try {
        hhat = pinv_full_col_rank(ahat);
    } catch (const GinvError& e) {
        if (e.code() == errc::rank_deficient)
            raise(errc::rank_deficient_block, "columns T of A are linearly dependent");
        throw;
    }
    GinvSolution<T> out;
    out.H = Matrix<T>(a.cols(), a.rows());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.rows(); ++j) out.H(t[i], j) = hhat(i, j);
    out.provenance = ColumnBlockTag{t};
    out.one_norm_value = one_norm(out.H);
    return out;
}

} // namespace ginv
