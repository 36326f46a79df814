#include <doctest.h>

#include "simplex.hpp"
#include "test_helpers.hpp"

using namespace ginv;
using namespace ginv::testing;

namespace {

template <class T>
void check_kkt(const LinearProgram<T>& lp, const LPSolution<T>& sol) {
    REQUIRE(sol.status == LPStatus::Optimal);
    LPDiagnostics<T> d = diagnose(lp, sol);
    if constexpr (scalar_traits<T>::exact) {
        CHECK(d.feasibility_residual == 0);
        CHECK(d.duality_gap == 0);
        CHECK(d.complementary_slackness == 0);
    } else {
        CHECK(d.feasibility_residual <= 1e-8);
        CHECK(d.duality_gap <= 1e-8);
        CHECK(d.complementary_slackness <= 1e-8);
    }
    for (const auto& x : sol.primal) CHECK(x >= T(0));
}

} // namespace

TEST_CASE("two variables, one row: objective 1, dual 1") {
    LinearProgram<Rational> lp;
    lp.constraint_matrix = qmat({{1, 1}});
    lp.rhs = {Q(1)};
    lp.objective = {Q(1), Q(1)};
    LPSolution<Rational> sol = solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective_value == 1);
    CHECK(sol.dual[0] == 1);
    check_kkt(lp, sol);
}

TEST_CASE("infeasible and unbounded statuses") {
    LinearProgram<Rational> lp;
    lp.constraint_matrix = qmat({{1, 1}, {1, 1}});
    lp.rhs = {Q(1), Q(2)}; // inconsistent duplicate rows
    lp.objective = {Q(1), Q(1)};
    CHECK(solve(lp).status == LPStatus::Infeasible);

    LinearProgram<Rational> ub;
    ub.constraint_matrix = qmat({{1, -1}});
    ub.rhs = {Q(1)};
    ub.objective = {Q(-1), Q(0)}; // x1 can grow along (1,1)
    CHECK(solve(ub).status == LPStatus::Unbounded);
}

TEST_CASE("redundant rows are harmless with and without elimination") {
    LinearProgram<Rational> lp;
    lp.constraint_matrix = qmat({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
    lp.rhs = {Q(2), Q(4), Q(1)};
    lp.objective = {Q(1), Q(2), Q(3)};
    LPSolution<Rational> a = solve(lp);
    SolveOptions keep;
    keep.eliminate_redundant_rows = false;
    LPSolution<Rational> b = solve(lp, keep);
    REQUIRE(a.status == LPStatus::Optimal);
    REQUIRE(b.status == LPStatus::Optimal);
    CHECK(a.objective_value == b.objective_value);
    check_kkt(lp, a);
    check_kkt(lp, b);
}

// Vectorized (P) for A = uu^T, u = (1,2). Independent oracle: a single-entry
// H with h * u_i u_j = 1 is feasible, so the best 1-sparse value is
// 1/max|u_i u_j|; the LP can only match or beat it, and weak duality with the
// returned multipliers confirms equality.
TEST_CASE("vectorized (P) for a rank-1 outer product hits the oracle") {
    Matrix<Rational> u = qmat({{1}, {2}});
    Matrix<Rational> a = u * u.transpose();
    Matrix<Rational> k = kron(a.transpose(), a);
    const int q = 4;
    LinearProgram<Rational> lp;
    lp.constraint_matrix = Matrix<Rational>(k.rows(), 2 * q);
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < q; ++j) {
            lp.constraint_matrix(i, j) = k(i, j);
            lp.constraint_matrix(i, q + j) = -k(i, j);
        }
    lp.rhs = a.vec();
    lp.objective.assign(2 * q, Q(1));
    LPSolution<Rational> sol = solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);

    Rational oracle_best;
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational prod = u(i, 0) * u(j, 0);
            if (prod == 0) continue;
            Rational v = 1 / scalar_abs(prod);
            if (first || v < oracle_best) oracle_best = v;
            first = false;
        }
    CHECK(oracle_best == Q(1, 4));
    CHECK(sol.objective_value == oracle_best);
    check_kkt(lp, sol);
}

TEST_CASE("vectorized (P) for the symmetric counterexample is at most 34/81") {
    Matrix<Rational> a = fixture_sym_counterexample();
    Matrix<Rational> k = kron(a.transpose(), a);
    const int q = 9;
    LinearProgram<Rational> lp;
    lp.constraint_matrix = Matrix<Rational>(k.rows(), 2 * q);
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < q; ++j) {
            lp.constraint_matrix(i, j) = k(i, j);
            lp.constraint_matrix(i, q + j) = -k(i, j);
        }
    lp.rhs = a.vec();
    lp.objective.assign(2 * q, Q(1));
    LPSolution<Rational> sol = solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective_value <= Q(34, 81));
    check_kkt(lp, sol);
}

TEST_CASE("float mode agrees with exact mode on random LPs") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 25) {
        int k = 2 + done % 3, q = k + 2 + done % 3;
        Matrix<Rational> m = random_int_matrix(rng, k, q, -4, 4);
        Matrix<Rational> x0(q, 1);
        for (int j = 0; j < q; ++j) x0(j, 0) = Q(std::uniform_int_distribution<int>(0, 3)(rng));
        Matrix<Rational> b = m * x0; // feasible by construction
        LinearProgram<Rational> lp;
        lp.constraint_matrix = m;
        lp.rhs = b.vec();
        lp.objective.assign(q, Q(1));
        LPSolution<Rational> ex = solve(lp);
        if (ex.status != LPStatus::Optimal) continue; // can be unbounded? objective >= 0, never
        check_kkt(lp, ex);

        LinearProgram<double> lpd;
        lpd.constraint_matrix = matrix_cast<double>(m);
        lpd.rhs.clear();
        for (const auto& v : lp.rhs) lpd.rhs.push_back(to_double(v));
        lpd.objective.assign(q, 1.0);
        LPSolution<double> fl = solve(lpd);
        REQUIRE(fl.status == LPStatus::Optimal);
        CHECK(std::abs(fl.objective_value - to_double(ex.objective_value)) <= 1e-7);
        check_kkt(lpd, fl);
        ++done;
    }
}
