// Dense matrices over Rational, row-major.  Everything is exact; there is
// no floating point anywhere in the library.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bidiag/rational.hpp"

namespace bidiag {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Rational trace() const;
    Matrix pow(unsigned long e) const;

    std::vector<Rational> row(size_t i) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);  // ab - ba

// Stack b below a (same column count) / right of a (same row count).
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

// Reduced row echelon form.  Returns the canonical form and the rank;
// rref_with_pivots additionally reports the pivot column of each nonzero row.
std::pair<Matrix, size_t> rref(const Matrix& m);
std::pair<Matrix, size_t> rref_with_pivots(const Matrix& m, std::vector<size_t>& pivots);

// Rows spanning the null space {x : m x = 0}, in the canonical form induced
// by the RREF of m (one row per free column, ascending).
Matrix null_space_rows(const Matrix& m);

Matrix inverse(const Matrix& m);  // Singular when not invertible

}  // namespace bidiag
