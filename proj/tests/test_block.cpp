#include <doctest.h>

#include "block.hpp"
#include "mp_check.hpp"
#include "test_helpers.hpp"

using namespace ginv;
using namespace ginv::testing;

namespace {

template <class T>
int nonzero_count(const Matrix<T>& m) {
    int c = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != T(0)) ++c;
    return c;
}

} // namespace

TEST_CASE("symmetric block norms of the rank-2 counterexample") {
    Matrix<Rational> a = fixture_sym_counterexample();
    int s12[] = {0, 1}, s13[] = {0, 2}, s23[] = {1, 2};
    CHECK(symmetric_block(a, s12).one_norm_value == Q(2));
    CHECK(symmetric_block(a, s13).one_norm_value == Q(17, 36));
    CHECK(symmetric_block(a, s23).one_norm_value == Q(17, 36));

    GinvSolution<Rational> sol = symmetric_block(a, s13);
    MPReport<Rational> rep = check_mp(a, sol.H);
    CHECK(rep.p1_residual == 0);
    CHECK(rep.p2_residual == 0);
    CHECK(*rep.h_symmetric_residual == 0);
    CHECK(rep.reflexive);
    // embedding: H[S] = A[S]^{-1}, zero elsewhere
    Matrix<Rational> inv = invert_small(a.submatrix(s13, s13));
    CHECK(sol.H.submatrix(s13, s13) == inv);
    CHECK(nonzero_count(sol.H) <= 4);
}

TEST_CASE("symmetric block of the identity is the identity") {
    Matrix<Rational> i4 = Matrix<Rational>::identity(4);
    int s[] = {0, 1, 2, 3};
    CHECK(symmetric_block(i4, s).H == i4);
}

TEST_CASE("rank-1 symmetric block from the outer-product formula") {
    // A = uu^T, u = (1,2): H on S={2} must be e2 e2^T / u2^2
    Matrix<Rational> u = qmat({{1}, {2}});
    Matrix<Rational> a = u * u.transpose();
    int s[] = {1};
    GinvSolution<Rational> sol = symmetric_block(a, s);
    Matrix<Rational> expect{{Q(0), Q(0)}, {Q(0), Q(1, 4)}};
    CHECK(sol.H == expect);
    MPReport<Rational> rep = check_mp(a, sol.H);
    CHECK(rep.p1_residual == 0);
    CHECK(rep.reflexive);
}

TEST_CASE("symmetric block error paths") {
    Matrix<Rational> a = fixture_sym_counterexample();
    int wrong[] = {0};
    CHECK_THROWS_AS(symmetric_block(a, wrong), GinvError);
    Matrix<Rational> asym = qmat({{1, 2}, {3, 4}});
    int s[] = {0, 1};
    CHECK_THROWS_AS(symmetric_block(asym, s), GinvError);
    // singular principal block: diag(1,1,0) restricted to {1,3} has det 0
    Matrix<Rational> d = qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    int sing[] = {0, 2};
    CHECK_THROWS_AS(symmetric_block(d, sing), GinvError);
}

TEST_CASE("column block norms of the ah fixtures") {
    Matrix<Rational> a = fixture_ah_counterexample();
    int t12[] = {0, 1}, t13[] = {0, 2}, t23[] = {1, 2};
    CHECK(column_block(a, t12).one_norm_value == Q(7, 6));
    CHECK(column_block(a, t13).one_norm_value == Q(31, 24));
    CHECK(column_block(a, t23).one_norm_value == Q(31, 24));
    int bad[] = {2};
    CHECK_THROWS_AS(column_block(a, bad), GinvError); // |T| != rank

    Matrix<Rational> rem = fixture_ah_mixed_cases();
    GinvSolution<Rational> sol = column_block(rem, t12);
    CHECK(sol.one_norm_value == Q(3));
    MPReport<Rational> rep = check_mp(rem, sol.H);
    CHECK(rep.p1_residual == 0);
    CHECK(rep.p2_residual == 0);
    CHECK(rep.p3_residual == 0);
    CHECK(rep.reflexive);
    CHECK(nonzero_count(sol.H) <= 2 * rem.rows());
}

TEST_CASE("column block with orthonormal columns is the transpose") {
    Matrix<Rational> a = qmat({{1, 0, 3}, {0, 1, 4}, {0, 0, 0}});
    int t[] = {0, 1};
    GinvSolution<Rational> sol = column_block(a, t);
    Matrix<Rational> ahat = a.select_columns(t);
    int all[] = {0, 1, 2};
    CHECK(sol.H.submatrix(t, all) == ahat.transpose());
}

TEST_CASE("column block rejects dependent columns") {
    Matrix<Rational> a = qmat({{1, 2, 0}, {2, 4, 1}});
    int t[] = {0, 1}; // columns 1,2 proportional
    CHECK_THROWS_AS(column_block(a, t), GinvError);
}

TEST_CASE("ordered T is normalized: reordering gives the identical H") {
    Matrix<Rational> a = fixture_ah_mixed_cases();
    int fwd[] = {0, 1}, rev[] = {1, 0};
    CHECK(column_block(a, fwd).H == column_block(a, rev).H);
}

TEST_CASE("block solutions are reflexive on random low-rank inputs") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 20) {
        int n = 3 + done % 3, r = 1 + done % 2;
        Matrix<Rational> b = random_int_matrix(rng, n, r, -3, 3);
        Matrix<Rational> a = b * b.transpose();
        if (rank_of(a) != r) continue;
        RankFactorization rf = rank_factorize(a);
        GinvSolution<Rational> sol = symmetric_block(a, rf.row_basis);
        MPReport<Rational> rep = check_mp(a, sol.H);
        CHECK(rep.p1_residual == 0);
        CHECK(rep.p2_residual == 0);
        CHECK(rep.rank_H == rep.rank_A);
        CHECK(nonzero_count(sol.H) <= r * r);
        ++done;
    }
}
