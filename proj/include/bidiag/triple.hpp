// Bidiagonal pairs and triples: discovery of standard eigenspace orderings,
// full verification against the defining conditions, parameter arrays,
// bases, and the operations that move triples around (conjugation, affine
// shifts, isomorphism tests).
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bidiag/spectrum.hpp"
#include "bidiag/subspace.hpp"

namespace bidiag {

struct Ordering {
    std::vector<Subspace> spaces;
    std::vector<Rational> eigenvalues;
    size_t diameter() const { return spaces.size() - 1; }
};

struct AffineMap {
    Rational r, s;  // x -> r x + s

    Rational operator()(const Rational& x) const { return r * x + s; }
    Matrix operator()(const Matrix& m) const {
        return r * m + s * Matrix::identity(m.rows());
    }
    AffineMap inverse_map() const {
        if (r.is_zero()) throw Singular("affine map with r = 0 has no inverse");
        return {r.inverse(), -s / r};
    }
    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.r == b.r && a.s == b.s;
    }
};

// Shape entries are stored as Rational rather than an integer type so that
// invalid candidate arrays (fractional or non-positive "dimensions") can be
// represented and reported by the validator instead of being unparseable.
struct ParameterArray {
    std::vector<Rational> first, second, third;
    std::vector<Rational> shape;

    size_t diameter() const { return first.empty() ? 0 : first.size() - 1; }
    friend bool operator==(const ParameterArray& a, const ParameterArray& b) {
        return a.first == b.first && a.second == b.second && a.third == b.third &&
               a.shape == b.shape;
    }
    friend bool operator!=(const ParameterArray& a, const ParameterArray& b) {
        return !(a == b);
    }
};

struct PairParameterArray {
    std::vector<Rational> first, second;
    std::vector<Rational> shape;
};

struct BidiagonalPair {
    Matrix a, a_prime;
    Ordering ord_a, ord_a_prime;
    PairParameterArray pa;
    Rational base;
    size_t diameter;
};

struct BidiagonalTriple {
    Matrix a, a_prime, a_double;
    Ordering ord_a, ord_a_prime, ord_a_double;
    ParameterArray pa;
    Rational base;
    size_t diameter;

    size_t dim() const { return a.rows(); }
    const Matrix& op(size_t k) const { return k == 0 ? a : (k == 1 ? a_prime : a_double); }
    const Ordering& ord(size_t k) const {
        return k == 0 ? ord_a : (k == 1 ? ord_a_prime : ord_a_double);
    }
};

// All eigenspace orderings of x compatible with the bidiagonal containments
// against the partners: partner_up must map the i-th space into itself plus
// the next one, partner_down into itself plus the previous one.  Either
// partner may be null.  The list is sorted by eigenvalue sequence and is
// never empty; NoStandardOrdering is thrown when the constraints cannot be
// met (or the constraint graph leaves more than a handful of chain
// arrangements open, which no genuine pair or triple does).
std::vector<Ordering> standard_ordering_candidates(const Matrix& x,
                                                   const Matrix* partner_up,
                                                   const Matrix* partner_down);

// First candidate.  When the containments alone do not pin the ordering the
// caller is expected to disambiguate with the bijectivity conditions, as the
// verifiers do.
Ordering find_standard_ordering(const Matrix& x, const Matrix* partner_up,
                                const Matrix* partner_down);

BidiagonalPair verify_bd_pair(const Matrix& a, const Matrix& a_prime);
BidiagonalTriple verify_bd_triple(const Matrix& a, const Matrix& a_prime,
                                  const Matrix& a_double);

// Common successive-difference ratio of all three sequences (1 by convention
// for diameter <= 1).  NotBRecurrent when the ratio varies, vanishes, or the
// sequences disagree.
Rational compute_base(const ParameterArray& pa);

// Positive q with q^-2 = b.  Requires b not in {0, 1}; Unrepresentable when
// 1/b is not a rational square.
Rational q_from_base(const Rational& b);

bool is_b_recurrent(const std::vector<Rational>& seq, const Rational& b);

// Map with s_i = r t_i + shift for all i, when one exists.
std::optional<AffineMap> affine_equivalent_sequences(const std::vector<Rational>& s,
                                                     const std::vector<Rational>& t);

// Map with x = r y + s I, when one exists (r != 0).
std::optional<AffineMap> affine_operator_map(const Matrix& x, const Matrix& y);

bool is_isomorphic(const BidiagonalTriple& t1, const BidiagonalTriple& t2);

BidiagonalTriple conjugate_triple(const BidiagonalTriple& t, const Matrix& mu);

// Componentwise shift (r A + s I, ...); every r must be nonzero.
BidiagonalTriple affine_shift_triple(const BidiagonalTriple& t,
                                     const std::array<AffineMap, 3>& maps);

}  // namespace bidiag
