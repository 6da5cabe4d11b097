#include "bidiag/matrix.hpp"

#include <sstream>

#include "bidiag/errors.hpp"

namespace bidiag {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    Rational t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::pow(unsigned long e) const {
    if (!is_square()) throw DimensionMismatch("power of non-square matrix");
    Matrix acc = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<Rational> Matrix::row(size_t i) const {
    std::vector<Rational> r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = c * m.data_[i];
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "[" : ", ") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

std::pair<Matrix, size_t> rref_with_pivots(const Matrix& m, std::vector<size_t>& pivots) {
    // Fraction-free Gauss-Jordan (Montante / Bareiss): rows are scaled to
    // integers once, then each elimination step is a cross-multiplication
    // followed by an exact division by the previous pivot.  Intermediate
    // entries are minors of the scaled matrix, so nothing here pays the
    // per-operation gcd that rational updates would.
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (size_t j = 0; j < cols; ++j) {
            mpz_class t;
            mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
            a[i][j] = m.at(i, j).num() * t;
        }
    }

    pivots.clear();
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        const mpz_class piv = a[r][c];
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const mpz_class f = a[i][c];
            for (size_t j = 0; j < cols; ++j) {
                mpz_class t = a[i][j] * piv - f * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    // every pivot entry now equals the last pivot; dividing each pivot row
    // by it yields the canonical reduced echelon form
    Matrix out(rows, cols);
    for (size_t t = 0; t < r; ++t) {
        const mpz_class& piv = a[t][pivots[t]];
        for (size_t j = 0; j < cols; ++j)
            if (a[t][j] != 0) out.at(t, j) = Rational(a[t][j], piv);
    }
    return {out, r};
}

std::pair<Matrix, size_t> rref(const Matrix& m) {
    std::vector<size_t> pivots;
    return rref_with_pivots(m, pivots);
}

Matrix null_space_rows(const Matrix& m) {
    std::vector<size_t> pivots;
    auto [r, rank] = rref_with_pivots(m, pivots);
    size_t n = m.cols();
    std::vector<size_t> free_cols;
    {
        size_t pi = 0;
        for (size_t c = 0; c < n; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) ++pi;
            else free_cols.push_back(c);
        }
    }
    Matrix out(free_cols.size(), n);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        out.at(k, f) = Rational(1);
        for (size_t i = 0; i < rank; ++i)
            out.at(k, pivots[i]) = -r.at(i, f);
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return m;
    std::vector<size_t> pivots;
    auto [r, rank] = rref_with_pivots(hstack(m, Matrix::identity(n)), pivots);
    // invertible iff every pivot lands in the left block
    if (rank < n || pivots[n - 1] != n - 1) throw Singular("matrix is not invertible");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

}  // namespace bidiag
