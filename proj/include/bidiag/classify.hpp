// Classification of bidiagonal triples by parameter array: realizability
// checks, construction of a triple from any realizable array, the scalars of
// the fundamental relations, and reduction to canonical eigenvalue sequences.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bidiag/triple.hpp"

namespace bidiag {

// Scalars of the three relations
//   A A'  - b A' A  - a' A  - a A'  - g1 I = 0
//   A' A'' - b A'' A' - a'' A' - a' A'' - g2 I = 0
//   A'' A - b A A'' - a A'' - a'' A - g3 I = 0.
struct RelationScalars {
    Rational b;
    Rational alpha;
    Rational alpha_prime;
    Rational alpha_double;
    Rational gamma1;
    Rational gamma2;
    Rational gamma3;
};

// One failed realizability condition.  `condition` is the roman label
// "i".."v"; `message` says what went wrong where.
struct ConditionViolation {
    std::string condition;
    std::string message;
};

struct ValidationResult {
    std::vector<ConditionViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Realizability conditions on a parameter array:
//   (i)   entries within each eigenvalue sequence are pairwise distinct
//   (ii)  the successive-difference ratios of the three sequences are all
//         equal and constant (vacuous for diameter <= 1)
//   (iii) every shape entry is a positive integer
//   (iv)  the shape is symmetric
//   (v)   the shape is nondecreasing up to the middle
// Violations are returned as data, at most one entry per condition.
ValidationResult validate_parameter_array(const ParameterArray& pa);

// Builds a verified triple whose parameter array equals pa exactly.  Routes
// through the matching module (sl2 for base 1, uq otherwise) and applies the
// affine shifts carrying the canonical sequences onto pa's.  When the base
// is not 1, q may be supplied (negative accepted, |q| used); otherwise it is
// derived from the base, with Unrepresentable when that needs an irrational.
BidiagonalTriple construct_from_parameter_array(
    const ParameterArray& pa, const std::optional<Rational>& q = std::nullopt);

// The seven scalars, computed from the i = 0 instances of the recurrences
//   x_{i+1} - b x_i = a   and   b x_i y_{d-i-1} - x_{i+1} y_{d-i} = g
// and then verified at every i (NotBRecurrent on failure).  Diameter 0 uses
// the fixed convention b = 1, a = a' = a'' = 1, g1 = -(th0 + th'0) etc.
RelationScalars relation_scalars(const ParameterArray& pa);

// Computes the scalars from t's parameter array and checks the three matrix
// relations hold exactly; returns the scalars.  RelationViolation names the
// failing relation (a consistency check: verified triples always satisfy
// them).
RelationScalars verify_fundamental_relations(const BidiagonalTriple& t);

struct ReducedTriple {
    BidiagonalTriple triple;
    // t.op(k) == maps[k](reduced.op(k)) for each operator index k.
    std::array<AffineMap, 3> maps;
};

// Affine-equivalent triple on the same eigenspace decompositions whose three
// sequences are all {2i - d} (base 1, which includes every diameter <= 1
// triple) or all {q^(d-2i)} (base != 1).  q is resolved as in
// construct_from_parameter_array.
ReducedTriple reduce_triple(const BidiagonalTriple& t,
                            const std::optional<Rational>& q = std::nullopt);

}  // namespace bidiag
