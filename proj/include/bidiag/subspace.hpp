// Subspaces of Q^n held in canonical form: the basis is the RREF row basis,
// so two subspaces are equal exactly when their basis matrices are equal.
#pragma once

#include <optional>
#include <vector>

#include "bidiag/matrix.hpp"

namespace bidiag {

class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient) : basis_(0, ambient), ambient_(ambient) {}

    // Span of the rows, canonicalized.
    static Subspace span(const Matrix& rows);
    static Subspace span_of_vectors(const std::vector<std::vector<Rational>>& vecs);
    static Subspace full(size_t ambient);

    size_t dim() const { return basis_.rows(); }
    size_t ambient() const { return ambient_; }
    bool is_zero() const { return dim() == 0; }
    const Matrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(size_t i) const { return basis_.row(i); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of v in this basis, or nullopt when v is outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Matrix basis_;
    size_t ambient_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);  // Zassenhaus

// True when the parts are all nonzero, pairwise independent and together
// span the whole ambient space.
bool is_decomposition(const std::vector<Subspace>& parts, size_t ambient);

Subspace kernel(const Matrix& m);
Subspace eigenspace(const Matrix& m, const Rational& lambda);

// Matrix of op restricted to `from`, expressed from `from`'s basis to `to`'s
// basis (dim(to) x dim(from)).  Throws NotInvariant when op(from) is not
// contained in to.
Matrix restriction_matrix(const Matrix& op, const Subspace& from, const Subspace& to);

// The unique operator acting as eigenvalues[i] on parts[i].
Matrix operator_from_decomposition(const std::vector<Subspace>& parts,
                                   const std::vector<Rational>& eigenvalues);

}  // namespace bidiag
