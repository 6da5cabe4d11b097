// Frozen spectra below were computed independently by
// tests/oracles/charpoly_roots.py.
#include "doctest.h"

#include "bidiag/spectrum.hpp"
#include "corpus.hpp"

using namespace bidiag;
using corpus::R;
using corpus::mat;

namespace {

Poly poly(const std::vector<Rational>& ascending) { return ascending; }

}  // namespace

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("char_poly matches the oracle") {
    // diag(1,-1,1,-1): x^4 - 2x^2 + 1
    CHECK(char_poly(mat({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}})) ==
          poly({R(1), R(0), R(-2), R(0), R(1)}));
    // nilpotent Jordan block: x^2
    CHECK(char_poly(mat({{0, 1}, {0, 0}})) == poly({R(0), R(0), R(1)}));
    // Y action on the degree-2 module: x^3 - 4x
    CHECK(char_poly(mat({{-2, 0, 0}, {-2, 0, 0}, {0, -4, 2}})) ==
          poly({R(0), R(-4), R(0), R(1)}));
    // [[2,1],[1,2]]: x^2 - 4x + 3
    CHECK(char_poly(mat({{2, 1}, {1, 2}})) == poly({R(3), R(-4), R(1)}));
    // [[1/2,1/3],[1/4,1/5]]: x^2 - 7/10 x + 1/60
    CHECK(char_poly(corpus::matq({{R(1, 2), R(1, 3)}, {R(1, 4), R(1, 5)}})) ==
          poly({R(1, 60), R(-7, 10), R(1)}));
    // rotation: x^2 + 1
    CHECK(char_poly(mat({{0, -1}, {1, 0}})) == poly({R(1), R(0), R(1)}));
    CHECK(char_poly(Matrix::identity(1)) == poly({R(-1), R(1)}));
}

TEST_CASE("poly_eval") {
    Poly p = poly({R(3), R(-4), R(1)});
    CHECK(poly_eval(p, R(1)) == R(0));
    CHECK(poly_eval(p, R(3)) == R(0));
    CHECK(poly_eval(p, R(0)) == R(3));
    CHECK(poly_eval(p, R(1, 2)) == R(5, 4));
}

TEST_CASE("rational_roots") {
    SUBCASE("split with multiplicities") {
        RootList rl = rational_roots(poly({R(1), R(0), R(-2), R(0), R(1)}));
        REQUIRE(rl.roots.size() == 2);
        CHECK(rl.roots[0] == std::pair{R(-1), size_t{2}});
        CHECK(rl.roots[1] == std::pair{R(1), size_t{2}});
        CHECK(rl.complete);
    }
    SUBCASE("irrational pair is reported incomplete") {
        RootList rl = rational_roots(poly({R(-2), R(0), R(1)}));  // x^2 - 2
        CHECK(rl.roots.empty());
        CHECK_FALSE(rl.complete);
    }
    SUBCASE("no real roots at all") {
        RootList rl = rational_roots(poly({R(1), R(0), R(1)}));  // x^2 + 1
        CHECK(rl.roots.empty());
        CHECK_FALSE(rl.complete);
    }
    SUBCASE("mixed rational and irrational") {
        // (x - 1)(x^2 - 2) = x^3 - x^2 - 2x + 2
        RootList rl = rational_roots(poly({R(2), R(-2), R(-1), R(1)}));
        REQUIRE(rl.roots.size() == 1);
        CHECK(rl.roots[0] == std::pair{R(1), size_t{1}});
        CHECK_FALSE(rl.complete);
    }
    SUBCASE("fractional roots with large denominators") {
        // (x - 355/113)(x + 2/7)
        Rational a = R(355, 113), b = R(2, 7);
        Poly p = poly({-a * b, b - a, R(1)});
        RootList rl = rational_roots(p);
        REQUIRE(rl.roots.size() == 2);
        CHECK(rl.roots[0].first == R(-2, 7));
        CHECK(rl.roots[1].first == R(355, 113));
        CHECK(rl.complete);
    }
}

TEST_CASE("simplest_rational_between") {
    CHECK(simplest_rational_between(R(1, 3), R(1, 2)) == R(2, 5));
    CHECK(simplest_rational_between(R(0), R(1)) == R(1, 2));
    CHECK(simplest_rational_between(R(-1), R(1)) == R(0));
    CHECK(simplest_rational_between(R(2), R(3)) == R(5, 2));
    // the result must lie strictly inside and have the smallest denominator
    Rational got = simplest_rational_between(R(113, 355), R(114, 355));
    CHECK(R(113, 355) < got);
    CHECK(got < R(114, 355));
    for (long den = 1; den < got.den().get_si(); ++den) {
        // no fraction with a smaller denominator fits in the interval
        mpz_class lo_floor = (R(113, 355) * R(den)).floor();
        Rational candidate((lo_floor + 1), mpz_class(den));
        CHECK_FALSE(candidate < R(114, 355));
    }
}

TEST_CASE("eigen_decompose matches the oracle") {
    SUBCASE("diagonal with repeats") {
        EigenDecomposition ed =
            eigen_decompose(mat({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
        CHECK(ed.diagonalizable);
        CHECK(ed.rational_char_poly_split);
        REQUIRE(ed.eigenvalues.size() == 2);
        CHECK(ed.eigenvalues[0] == R(-1));
        CHECK(ed.eigenvalues[1] == R(1));
        CHECK(ed.eigenspaces[0].dim() == 2);
        CHECK(ed.eigenspaces[1].dim() == 2);
        CHECK(ed.eigenspaces[1].contains({R(1), R(0), R(0), R(0)}));
        CHECK(ed.eigenspaces[1].contains({R(0), R(0), R(1), R(0)}));
        CHECK_FALSE(ed.eigenspaces[1].contains({R(0), R(1), R(0), R(0)}));
    }
    SUBCASE("defective matrix") {
        EigenDecomposition ed = eigen_decompose(mat({{0, 1}, {0, 0}}));
        CHECK_FALSE(ed.diagonalizable);
        CHECK(ed.rational_char_poly_split);
        REQUIRE(ed.eigenvalues.size() == 1);
        CHECK(ed.eigenspaces[0].dim() == 1);
    }
    SUBCASE("module action") {
        EigenDecomposition ed = eigen_decompose(mat({{-2, 0, 0}, {-2, 0, 0}, {0, -4, 2}}));
        CHECK(ed.diagonalizable);
        REQUIRE(ed.eigenvalues.size() == 3);
        CHECK(ed.eigenvalues == std::vector<Rational>{R(-2), R(0), R(2)});
        CHECK(ed.eigenspaces[0].contains({R(1), R(1), R(1)}));
        CHECK(ed.eigenspaces[1].contains({R(0), R(1, 2), R(1)}));
        CHECK(ed.eigenspaces[2].contains({R(0), R(0), R(1)}));
    }
    SUBCASE("irrational spectrum leaves no rational eigenvalues") {
        EigenDecomposition ed =
            eigen_decompose(corpus::matq({{R(1, 2), R(1, 3)}, {R(1, 4), R(1, 5)}}));
        CHECK_FALSE(ed.diagonalizable);
        CHECK_FALSE(ed.rational_char_poly_split);
        CHECK(ed.eigenvalues.empty());
    }
    SUBCASE("defective with a clean second eigenvalue") {
        EigenDecomposition ed = eigen_decompose(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
        CHECK_FALSE(ed.diagonalizable);
        CHECK(ed.rational_char_poly_split);
        REQUIRE(ed.eigenvalues.size() == 2);
        CHECK(ed.eigenspaces[0].dim() == 1);  // eigenvalue 1, geometric mult 1
        CHECK(ed.eigenspaces[1].dim() == 1);
    }
}

TEST_SUITE_END();
