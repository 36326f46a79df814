#include <doctest.h>

#include <sstream>

#include "matrix_io.hpp"
#include "test_helpers.hpp"

using namespace ginv;
using namespace ginv::testing;

TEST_CASE("dense text with fractions, commas and comments") {
    Matrix<Rational> m = parse_matrix_exact("# comment\n5, 4 2\n-1/2 0.25 2e1\n");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 0) == 5);
    CHECK(m(1, 0) == Q(-1, 2));
    CHECK(m(1, 1) == Q(1, 4));
    CHECK(m(1, 2) == 20);
}

TEST_CASE("token edge cases") {
    CHECK(rational_from_token("34/81") == Q(34, 81));
    CHECK(rational_from_token("-3.5e-2") == Q(-7, 200));
    CHECK(rational_from_token("+7") == 7);
    CHECK(rational_from_token("0.1") == Q(1, 10));
    CHECK_THROWS_AS(rational_from_token("1/0"), GinvError);
    CHECK_THROWS_AS(rational_from_token("abc"), GinvError);
    CHECK_THROWS_AS(rational_from_token("1.2.3"), GinvError);
}

TEST_CASE("ragged and empty inputs are rejected") {
    CHECK_THROWS_AS(parse_matrix_exact("1 2\n3\n"), GinvError);
    CHECK_THROWS_AS(parse_matrix_exact("   \n# nothing\n"), GinvError);
}

TEST_CASE("matrix market array format, column-major") {
    std::string text =
        "%%MatrixMarket matrix array real general\n"
        "% a 2x2\n"
        "2 2\n1\n2\n3\n4\n";
    Matrix<Rational> m = parse_matrix_exact(text);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == 2);
    CHECK(m(0, 1) == 3);
    CHECK(m(1, 1) == 4);
}

TEST_CASE("matrix market coordinate symmetric mirrors entries") {
    std::string text =
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "3 3 3\n"
        "1 1 5\n"
        "2 1 4\n"
        "3 3 1/2\n";
    Matrix<Rational> m = parse_matrix_exact(text);
    CHECK(m(0, 0) == 5);
    CHECK(m(0, 1) == 4);
    CHECK(m(1, 0) == 4);
    CHECK(m(2, 2) == Q(1, 2));
    CHECK(m(1, 1) == 0);
}

TEST_CASE("matrix market malformed inputs") {
    CHECK_THROWS_AS(parse_matrix_exact("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1\n"),
                    GinvError);
    CHECK_THROWS_AS(parse_matrix_exact("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n"),
                    GinvError);
    CHECK_THROWS_AS(parse_matrix_exact("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"),
                    GinvError);
}

TEST_CASE("exact round-trip: format then parse is the identity") {
    std::mt19937 rng(71);
    for (int iter = 0; iter < 30; ++iter) {
        Matrix<Rational> a = random_int_matrix(rng, 2 + iter % 3, 2 + (iter / 2) % 3, -9, 9);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a(i, j) /= Q(1 + (iter % 7));
        Matrix<Rational> back = parse_matrix_exact(format_matrix(a));
        CHECK(back == a);
    }
}

TEST_CASE("numeric mode selection") {
    AnyMatrix exact = parse_matrix("1/2 1\n1 1\n", NumericMode::Auto);
    CHECK(std::holds_alternative<Matrix<Rational>>(exact));
    AnyMatrix fl = parse_matrix("1/2 1\n1 1\n", NumericMode::Float);
    REQUIRE(std::holds_alternative<Matrix<double>>(fl));
    CHECK(std::get<Matrix<double>>(fl)(0, 0) == 0.5);

    // auto switches to float past the size limit
    std::ostringstream big;
    for (int i = 0; i < kExactAutoLimit + 1; ++i) {
        for (int j = 0; j < kExactAutoLimit + 1; ++j) big << (i == j ? 1 : 0) << ' ';
        big << '\n';
    }
    CHECK(std::holds_alternative<Matrix<double>>(parse_matrix(big.str(), NumericMode::Auto)));
    CHECK(std::holds_alternative<Matrix<Rational>>(parse_matrix(big.str(), NumericMode::Exact)));
}

TEST_CASE("digest is stable and content-sensitive") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    CHECK(content_digest("").size() == 16);
}
