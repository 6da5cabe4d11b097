// Extending a bidiagonal pair to a bidiagonal triple: the split
// decomposition obtained by intersecting corner sums, the two canonical
// eigenvalue assignments on it, and the affine-uniqueness check for the
// third operator.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bidiag/triple.hpp"

namespace bidiag {

struct SplitDecomposition {
    std::vector<Subspace> parts;        // the intersections, indexed 0..d
    std::vector<Subspace> from_first;   // standard ordering the pair's A
    std::vector<Subspace> from_second;  // standard ordering of the pair's A'
};

// parts[i] = (V_0 + ... + V_{d-i}) ∩ (V'_0 + ... + V'_i).  Verifies that the
// parts form a decomposition and satisfy both corner-sum identities before
// returning; failures are InternalInvariantViolation since a verified pair
// cannot produce them.
SplitDecomposition split_decomposition(const BidiagonalPair& pair);

// The two canonical operators diagonalized by the split decomposition: the
// first has eigenvalue theta_i on parts[i], the second theta'_{d-i}.  They
// are affine images of one another and of any valid third operator.
std::pair<Matrix, Matrix> candidate_maps(const BidiagonalPair& pair);

// Builds a third operator with the split decomposition as eigenspaces and
// the target sequence as eigenvalues, then fully verifies the triple.  The
// default target is {2i-d} for base 1 and {q^(d-2i)} otherwise, with q taken
// from the argument or computed from the base (Unrepresentable when 1/b is
// not a rational square and no explicit target is supplied).  An explicit
// target must be b-recurrent for d >= 2 and have distinct entries for d = 1;
// otherwise NotBRecurrent.
BidiagonalTriple extend_pair(const BidiagonalPair& pair,
                             const std::optional<std::vector<Rational>>& target = std::nullopt,
                             const std::optional<Rational>& q = std::nullopt);

// Requires t1, t2 with affinely related first and second operators
// (PreconditionFailed otherwise); returns whether the third operators are
// affinely related too.
bool check_uniqueness(const BidiagonalTriple& t1, const BidiagonalTriple& t2);

}  // namespace bidiag
