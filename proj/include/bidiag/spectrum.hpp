// Exact spectra of rational matrices: characteristic polynomial, rational
// root isolation, and eigenspace decompositions.  Roots are found without
// integer factorization (Sturm chains plus a smallest-denominator candidate
// in each isolating interval), so large entries stay cheap.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bidiag/matrix.hpp"
#include "bidiag/subspace.hpp"

namespace bidiag {

// Coefficients ascending: p[i] is the coefficient of x^i.
using Poly = std::vector<Rational>;

Rational poly_eval(const Poly& p, const Rational& x);

// Monic characteristic polynomial det(xI - m), computed by the
// Faddeev-LeVerrier recurrence on a denominator-cleared integer matrix.
Poly char_poly(const Matrix& m);

struct RootList {
    std::vector<std::pair<Rational, size_t>> roots;  // ascending, with multiplicities
    bool complete;  // multiplicities sum to the degree
};

// root_denominator, when given, is a positive integer D such that every
// rational root of p has denominator dividing D (for a characteristic
// polynomial, the lcm of the matrix entry denominators).  It tightens the
// root-separation bound from 1/lead^2 to 1/D^2, which keeps isolation cheap
// when the coefficients are large.
RootList rational_roots(const Poly& p,
                        const std::optional<mpz_class>& root_denominator = std::nullopt);

// The smallest-denominator rational strictly between lo and hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

struct EigenDecomposition {
    std::vector<Rational> eigenvalues;  // ascending
    std::vector<Subspace> eigenspaces;  // parallel to eigenvalues
    bool diagonalizable;                // true iff the eigenspaces sum to the whole space
    bool rational_char_poly_split;      // char poly has all roots rational
};

EigenDecomposition eigen_decompose(const Matrix& m);

}  // namespace bidiag
