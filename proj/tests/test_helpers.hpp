#pragma once

#include <random>
#include <vector>

#include "matrix.hpp"

namespace ginv::testing {

inline Rational Q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Matrix<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()),
                       static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// The three worked fixtures used throughout the suites.
inline Matrix<Rational> fixture_sym_counterexample() {
    return qmat({{5, 4, 2}, {4, 5, -2}, {2, -2, 8}});
}
inline Matrix<Rational> fixture_ah_counterexample() {
    return qmat({{1, 3, 8}, {2, 2, 8}, {3, 1, 8}});
}
inline Matrix<Rational> fixture_ah_mixed_cases() {
    return qmat({{2, 3, 1, 5}, {2, 3, 1, 5}, {2, 5, 2, 7}});
}

// Random integer matrices as exact rationals.
inline Matrix<Rational> random_int_matrix(std::mt19937& rng, int m, int n, int lo, int hi,
                                          bool forbid_zero_entries = false) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix<Rational> out(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int v = d(rng);
            while (forbid_zero_entries && v == 0) v = d(rng);
            out(i, j) = Rational(v);
        }
    return out;
}

// rank-r product B (m x r) * C (r x n); caller checks the achieved rank
inline Matrix<Rational> random_product(std::mt19937& rng, int m, int n, int r, int lo, int hi) {
    Matrix<Rational> b = random_int_matrix(rng, m, r, lo, hi);
    Matrix<Rational> c = random_int_matrix(rng, r, n, lo, hi);
    return b * c;
}

} // namespace ginv::testing
