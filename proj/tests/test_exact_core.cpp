#include "support.hpp"

#include <doctest.h>

using namespace modfun;
using modfun::test::Gen;

TEST_CASE("rationals stay in lowest terms with a positive denominator")
{
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
}

TEST_CASE("rational parsing rejects malformed text")
{
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "--1", "1/2/3"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("division by zero is a domain error")
{
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic does not overflow machine integers")
{
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000003);
    CHECK(big / big == Rational(1));
    CHECK_THROWS(big.to_int64());
    CHECK((big - big).is_zero());
}

TEST_CASE("property: field laws on random triples")
{
    Gen g(11);
    for (int t = 0; t < 500; ++t) {
        const Rational a = g.rational(50);
        const Rational b = g.rational(50);
        const Rational c = g.rational(50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("mat_mul examples")
{
    const Matrix m{{1, 2}, {3, 4}};
    CHECK(Matrix::identity(2) * m == m);
    CHECK(m * Matrix{{0, 1}, {1, 0}} == Matrix{{2, 1}, {4, 3}});
    CHECK(Matrix{{Rational(1, 2)}} * Matrix{{Rational(2, 3)}} == Matrix{{Rational(1, 3)}});
}

TEST_CASE("mat_mul names both shapes on mismatch")
{
    try {
        (void)(Matrix(2, 3) * Matrix(2, 3));
        FAIL("expected DimensionMismatch");
    } catch (const DimensionMismatch& e) {
        const std::string what = e.what();
        CHECK(what.find("2x3") != std::string::npos);
    }
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix(3, 3)) == 0);
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("invert examples")
{
    CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(invert(Matrix{{2, 0}, {0, 3}}) == Matrix{{Rational(1, 2), 0}, {0, Rational(1, 3)}});
    CHECK(invert(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
}

TEST_CASE("invert reports the rank of a singular matrix")
{
    try {
        (void)invert(Matrix{{1, 2}, {2, 4}});
        FAIL("expected SingularMatrix");
    } catch (const SingularMatrix& e) {
        CHECK(e.rank() == 1);
    }
    CHECK_THROWS_AS((void)invert(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("property: rank is transpose invariant and inverses are exact")
{
    Gen g(12);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + g.index(5);
        const std::size_t c = 1 + g.index(5);
        const Matrix m = g.matrix(r, c);
        CHECK(rank(m) == rank(m.transpose()));
        const std::size_t n = 1 + g.index(5);
        const Matrix a = g.invertible(n);
        CHECK(invert(a) * a == Matrix::identity(n));
        CHECK(a * invert(a) == Matrix::identity(n));
        if (n > 1) {
            const Matrix low = g.low_rank(n, n - 1);
            CHECK(rank(low) < n);
            CHECK_THROWS_AS((void)invert(low), SingularMatrix);
        }
    }
}

TEST_CASE("property: nullspace vectors are killed and count matches rank-nullity")
{
    Gen g(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + g.index(5);
        const Matrix m = g.low_rank(n, g.index(n + 1));
        const auto ns = nullspace(m);
        CHECK(ns.size() + rank(m) == n);
        for (const auto& v : ns) {
            const Vector z = m * v;
            CHECK(std::all_of(z.begin(), z.end(), [](const Rational& x) { return x.is_zero(); }));
        }
    }
}

TEST_CASE("property: solve finds exact solutions of consistent systems")
{
    Gen g(14);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + g.index(4);
        const Matrix m = g.matrix(n, n);
        Vector x0(n);
        for (auto& v : x0) v = g.rational();
        Vector x;
        REQUIRE(solve(m, m * x0, x));
        CHECK(m * x == m * x0);
    }
    Vector x;
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{Rational(0), Rational(1)}, x));
}

TEST_CASE("kronecker product multiplies dimensions and respects products")
{
    Gen g(15);
    const Matrix a = g.matrix(2, 2);
    const Matrix b = g.matrix(3, 3);
    const Matrix c = g.matrix(2, 2);
    const Matrix d = g.matrix(3, 3);
    const Matrix k = kronecker(a, b);
    CHECK(k.rows() == 6);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
}

TEST_CASE("tensor indices are bounds checked")
{
    Tensor3<int> t(2, 3, 4);
    t(1, 2, 3) = 7;
    CHECK(t.at(1, 2, 3) == 7);
    CHECK(t.flat().back() == 7);
    CHECK_THROWS_AS(t.at(2, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(0, 0, 4), std::out_of_range);
}
