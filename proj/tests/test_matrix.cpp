#include "doctest.h"

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "corpus.hpp"

using namespace bidiag;
using corpus::R;
using corpus::mat;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("rref canonical forms") {
    SUBCASE("dependent rows collapse") {
        auto [r, rank] = rref(mat({{1, 2}, {2, 4}}));
        CHECK(r == mat({{1, 2}, {0, 0}}));
        CHECK(rank == 1);
    }
    SUBCASE("identity is fixed") {
        auto [r, rank] = rref(Matrix::identity(3));
        CHECK(r == Matrix::identity(3));
        CHECK(rank == 3);
    }
    SUBCASE("permutation sorts to identity") {
        auto [r, rank] = rref(mat({{0, 1}, {1, 0}}));
        CHECK(r == Matrix::identity(2));
        CHECK(rank == 2);
    }
    SUBCASE("pivot columns are reported") {
        std::vector<size_t> pivots;
        auto [r, rank] = rref_with_pivots(mat({{0, 2, 1}, {0, 4, 3}}), pivots);
        CHECK(rank == 2);
        CHECK(pivots == std::vector<size_t>{1, 2});
        CHECK(r == mat({{0, 1, 0}, {0, 0, 1}}));
    }
    SUBCASE("fractions are exact") {
        Matrix m = corpus::matq({{R(1, 2), R(1, 3)}, {R(1, 5), R(2, 15)}});
        auto [r, rank] = rref(m);
        CHECK(rank == 1);  // second row is 2/5 of the first
        CHECK(r.at(0, 0) == R(1));
        CHECK(r.at(0, 1) == R(2, 3));
    }
}

TEST_CASE("null space bases") {
    SUBCASE("zero map has full kernel") {
        Matrix rows = null_space_rows(Matrix(2, 2));
        CHECK(rows.rows() == 2);
        CHECK(rref(rows).second == 2);
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(null_space_rows(Matrix::identity(3)).rows() == 0);
    }
    SUBCASE("one relation") {
        Matrix rows = null_space_rows(mat({{1, 1}}));
        REQUIRE(rows.rows() == 1);
        // the canonical special solution for free column 1
        CHECK(rows.at(0, 0) == R(-1));
        CHECK(rows.at(0, 1) == R(1));
    }
}

TEST_CASE("inverse") {
    Matrix m = mat({{2, 1}, {1, 1}});
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Singular);
    CHECK_THROWS_AS(inverse(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("arithmetic and shape checks") {
    Matrix a = mat({{1, 2}, {3, 4}});
    Matrix b = mat({{0, 1}, {1, 0}});
    CHECK(a + b == mat({{1, 3}, {4, 4}}));
    CHECK(a - a == Matrix(2, 2));
    CHECK(a * b == mat({{2, 1}, {4, 3}}));
    CHECK(R(2) * a == mat({{2, 4}, {6, 8}}));
    CHECK(-a == mat({{-1, -2}, {-3, -4}}));
    CHECK(a.transpose() == mat({{1, 3}, {2, 4}}));
    CHECK(a.trace() == R(5));
    CHECK_THROWS_AS(a + Matrix(3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a * Matrix(3, 3), DimensionMismatch);
}

TEST_CASE("commutator") {
    Matrix a = mat({{1, 2}, {3, 4}});
    Matrix b = mat({{0, 1}, {1, 0}});
    CHECK(commutator(a, b) == a * b - b * a);
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(a, Matrix::identity(2)).is_zero());
}

TEST_CASE("powers") {
    Matrix a = mat({{0, 1}, {0, 0}});
    CHECK(a.pow(0) == Matrix::identity(2));
    CHECK(a.pow(1) == a);
    CHECK(a.pow(2).is_zero());
    Matrix d = mat({{2, 0}, {0, 3}});
    CHECK(d.pow(5) == mat({{32, 0}, {0, 243}}));
}

TEST_CASE("stacking") {
    Matrix a = mat({{1, 2}});
    Matrix b = mat({{3, 4}});
    CHECK(vstack(a, b) == mat({{1, 2}, {3, 4}}));
    CHECK(hstack(a, b) == mat({{1, 2, 3, 4}}));
    CHECK_THROWS_AS(vstack(a, Matrix(1, 3)), DimensionMismatch);
    CHECK_THROWS_AS(hstack(a, Matrix(2, 1)), DimensionMismatch);
}

TEST_CASE("apply and rows") {
    Matrix a = mat({{1, 2}, {3, 4}});
    CHECK(a.apply({R(1), R(1)}) == std::vector<Rational>{R(3), R(7)});
    CHECK(a.row(1) == std::vector<Rational>{R(3), R(4)});
}

TEST_SUITE_END();
