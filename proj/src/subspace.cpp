#include "bidiag/subspace.hpp"

#include "bidiag/errors.hpp"

namespace bidiag {

Subspace Subspace::span(const Matrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    auto [r, rank] = rref(rows);
    Matrix basis(rank, rows.cols());
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.at(i, j);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::span_of_vectors(const std::vector<std::vector<Rational>>& vecs) {
    return span(Matrix::from_rows(vecs));
}

Subspace Subspace::full(size_t ambient) { return span(Matrix::identity(ambient)); }

bool Subspace::contains(const std::vector<Rational>& v) const {
    return coordinates(v).has_value();
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector outside ambient space");
    // Basis rows are in RREF, so the coefficient of row i is just v at that
    // row's pivot column; membership means the residual vanishes.
    std::vector<Rational> residual = v, coords(dim());
    for (size_t i = 0; i < dim(); ++i) {
        size_t pivot = 0;
        while (pivot < ambient_ && basis_.at(i, pivot).is_zero()) ++pivot;
        coords[i] = residual[pivot];
        if (coords[i].is_zero()) continue;
        for (size_t j = pivot; j < ambient_; ++j)
            residual[j] -= coords[i] * basis_.at(i, j);
    }
    for (const auto& x : residual)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw DimensionMismatch("subspaces of different ambient spaces");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("sum of subspaces of different ambient spaces");
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("intersection of subspaces of different ambient spaces");
    size_t n = a.ambient();
    // Zassenhaus: rref of [[A|A],[B|0]]; rows with zero left half carry the
    // intersection in their right half.
    Matrix block(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
    auto [r, rank] = rref(block);
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j)
            if (!r.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rational> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = r.at(i, n + j);
        rows.push_back(v);
    }
    if (rows.empty()) return Subspace(n);
    return Subspace::span_of_vectors(rows);
}

bool is_decomposition(const std::vector<Subspace>& parts, size_t ambient) {
    if (parts.empty()) return false;
    size_t total = 0;
    Matrix stacked(0, ambient);
    for (const auto& p : parts) {
        if (p.ambient() != ambient)
            throw DimensionMismatch("decomposition part in wrong ambient space");
        if (p.is_zero()) return false;
        total += p.dim();
        stacked = vstack(stacked, p.basis());
    }
    if (total != ambient) return false;
    auto [r, rank] = rref(stacked);
    (void)r;
    return rank == ambient;
}

Subspace kernel(const Matrix& m) { return Subspace::span(null_space_rows(m)); }

Subspace eigenspace(const Matrix& m, const Rational& lambda) {
    if (!m.is_square()) throw DimensionMismatch("eigenspace of non-square matrix");
    return kernel(m - lambda * Matrix::identity(m.rows()));
}

Matrix restriction_matrix(const Matrix& op, const Subspace& from, const Subspace& to) {
    if (from.ambient() != to.ambient() || op.cols() != from.ambient() || !op.is_square())
        throw DimensionMismatch("restriction spaces do not match the operator");
    Matrix r(to.dim(), from.dim());
    for (size_t j = 0; j < from.dim(); ++j) {
        auto image = op.apply(from.basis_vector(j));
        auto coords = to.coordinates(image);
        if (!coords)
            throw NotInvariant("operator image leaves the target subspace");
        for (size_t i = 0; i < to.dim(); ++i) r.at(i, j) = (*coords)[i];
    }
    return r;
}

Matrix operator_from_decomposition(const std::vector<Subspace>& parts,
                                   const std::vector<Rational>& eigenvalues) {
    if (parts.size() != eigenvalues.size())
        throw DimensionMismatch("one eigenvalue per part required");
    if (parts.empty()) throw DimensionMismatch("empty decomposition");
    size_t n = parts[0].ambient();
    if (!is_decomposition(parts, n))
        throw PreconditionFailed("parts do not decompose the space");
    Matrix stacked(0, n);
    std::vector<Rational> diag;
    for (size_t k = 0; k < parts.size(); ++k) {
        stacked = vstack(stacked, parts[k].basis());
        for (size_t i = 0; i < parts[k].dim(); ++i) diag.push_back(eigenvalues[k]);
    }
    Matrix t = stacked.transpose();  // columns are the combined basis
    Matrix d(n, n);
    for (size_t i = 0; i < n; ++i) d.at(i, i) = diag[i];
    return t * d * inverse(t);
}

}  // namespace bidiag
