// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices over the rationals with exact Gaussian elimination.
//
// Every basis this library hands out is fixed by reduced row echelon form,
// so repeated runs produce bit-identical matrices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace bredon {

using Rational = mpq_class;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix column(std::size_t c) const;
    Matrix transposed() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix& operator*=(const Rational& s);
    friend bool operator==(const Matrix& a, const Matrix& b);

    // [a | b] and [a ; b]
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const std::vector<Matrix>& blocks);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct Echelon {
    Matrix reduced;                  // RREF, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Columns span {x : m x = 0}. One column per free variable of the RREF, with
// a 1 in that free slot and 0 in the other free slots.
Matrix nullspace(const Matrix& m);

// Columns form a basis of the column space of m, taken as the RREF rows of
// m^T (so the basis is canonical, independent of the spanning set).
Matrix column_space(const Matrix& m);

// For a basis b (full column rank) returns l with l * b = I.
Matrix left_inverse(const Matrix& b);

Matrix inverse(const Matrix& m);

// Solve b x = v for a full-column-rank b; throws if v is not in the span.
Matrix coordinates(const Matrix& basis, const Matrix& left_inv, const Matrix& v);

// Incremental row reducer: accumulates constraint rows in RREF, so large
// sparse systems never materialise as one dense matrix.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    // Returns true if the row increased the rank.
    bool add(std::vector<Rational> row);
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    Matrix nullspace() const;

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;  // fully reduced, pivot 1
    std::vector<std::size_t> pivots_;
};

std::string to_string(const Rational& q);

}  // namespace bredon
