#include <doctest.h>

#include "mp_check.hpp"
#include "test_helpers.hpp"

using namespace ginv;
using namespace ginv::testing;

TEST_CASE("A/81 is a symmetric reflexive generalized inverse of the fixture") {
    Matrix<Rational> a = fixture_sym_counterexample();
    Matrix<Rational> h = Q(1, 81) * a;
    MPReport<Rational> r = check_mp(a, h);
    CHECK(r.p1_residual == 0);
    CHECK(r.p2_residual == 0);
    REQUIRE(r.h_symmetric_residual.has_value());
    CHECK(*r.h_symmetric_residual == 0);
    CHECK(r.rank_A == 2);
    CHECK(r.rank_H == 2);
    CHECK(r.reflexive);
}

TEST_CASE("identity is its own pseudoinverse") {
    Matrix<Rational> i3 = Matrix<Rational>::identity(3);
    MPReport<Rational> r = check_mp(i3, i3);
    CHECK(r.p1_residual == 0);
    CHECK(r.p2_residual == 0);
    CHECK(r.p3_residual == 0);
    CHECK(r.p4_residual == 0);
    CHECK(r.reflexive);
}

TEST_CASE("known sparse ah-symmetric inverse of the second fixture") {
    Matrix<Rational> a = fixture_ah_counterexample();
    Matrix<Rational> h{{Q(-1, 4), Q(0), Q(1, 4)},
                       {Q(1, 4), Q(0), Q(-1, 4)},
                       {Q(1, 24), Q(1, 24), Q(1, 24)}};
    MPReport<Rational> r = check_mp(a, h);
    CHECK(r.p1_residual == 0);
    CHECK(r.p2_residual == 0);
    CHECK(r.p3_residual == 0);
    CHECK(r.reflexive);
    CHECK(one_norm(h) == Q(9, 8));
}

TEST_CASE("boolean wrappers") {
    Matrix<Rational> a = fixture_ah_counterexample();
    Matrix<Rational> zero(3, 3);
    CHECK_FALSE(is_generalized_inverse(a, zero, Rational(0)));
    Matrix<Rational> i2 = Matrix<Rational>::identity(2);
    CHECK(is_generalized_inverse(i2, i2, Rational(0)));
    CHECK(is_ah_symmetric(i2, i2, Rational(0)));
    Matrix<Rational> h{{Q(-1, 4), Q(0), Q(1, 4)},
                       {Q(1, 4), Q(0), Q(-1, 4)},
                       {Q(1, 24), Q(1, 24), Q(1, 24)}};
    CHECK(is_generalized_inverse(a, h, Rational(0)));
    CHECK(is_ah_symmetric(a, h, Rational(0)));
}

TEST_CASE("dimension mismatch is rejected") {
    Matrix<Rational> a(2, 3);
    Matrix<Rational> bad(2, 3);
    CHECK_THROWS_AS(check_mp(a, bad), GinvError);
}

TEST_CASE("rank(H) >= rank(A) whenever (P1) holds exactly") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 20) {
        int m = 2 + done % 3, n = 2 + (done / 2) % 3;
        Matrix<Rational> a = random_product(rng, m, n, 1, -4, 4);
        if (a.is_zero()) continue;
        // H built from any nonzero entry: H_{ji} = 1/(u_i v_j) for A = u v^T
        int pi = -1, pj = -1;
        for (int i = 0; i < m && pi < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (a(i, j) != 0) { pi = i; pj = j; break; }
        Matrix<Rational> h(n, m);
        h(pj, pi) = 1 / a(pi, pj);
        MPReport<Rational> r = check_mp(a, h);
        if (r.p1_residual == 0) CHECK(r.rank_H >= r.rank_A);
        ++done;
    }
}

TEST_CASE("non-square H has no symmetry residual") {
    Matrix<Rational> a = qmat({{1, 0, 0}, {0, 1, 0}});
    Matrix<Rational> h = a.transpose();
    MPReport<Rational> r = check_mp(a, h);
    CHECK(r.p1_residual == 0);
    CHECK_FALSE(r.h_symmetric_residual.has_value());
}

TEST_CASE("float mode residuals stay below the tolerance for exact data") {
    Matrix<double> a = matrix_cast<double>(fixture_sym_counterexample());
    Matrix<double> h = (1.0 / 81.0) * a;
    MPReport<double> r = check_mp(a, h);
    CHECK(r.p1_residual <= 1e-9);
    CHECK(r.p2_residual <= 1e-9);
    CHECK(r.reflexive);
}
