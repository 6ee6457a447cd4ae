// SPDX-License-Identifier: Apache-2.0
#include "bredon/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bredon/error.hpp"

namespace bredon {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        ensure(r.size() == cols_, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(std::size_t c) const {
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    ensure(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) != 0) out(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    ensure(a.rows_ == b.rows_, "hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    ensure(a.cols_ == b.cols_, "vstack column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<long>(a.data_.size()));
    return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows_;
        cols += b.cols_;
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) out(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows_;
        c0 += b.cols_;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
    }
    return os << ']';
}

std::string to_string(const Rational& q) { return q.get_str(); }

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t lead = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && sgn(m(piv, col)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(piv, c), m(lead, c));
        const Rational inv = 1 / m(lead, col);
        for (std::size_t c = col; c < cols; ++c) m(lead, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(m(r, col)) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(m(lead, c)) != 0) m(r, c) -= f * m(lead, c);
        }
        e.pivots.push_back(col);
        ++lead;
    }
    e.reduced = Matrix(lead, cols);
    for (std::size_t r = 0; r < lead; ++r)
        for (std::size_t c = 0; c < cols; ++c) e.reduced(r, c) = m(r, c);
    return e;
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return rref(m).pivots.size();
}

namespace {

Matrix nullspace_from(const Matrix& reduced, const std::vector<std::size_t>& pivots, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix out(cols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(free[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -reduced(r, free[k]);
    }
    return out;
}

}  // namespace

Matrix nullspace(const Matrix& m) {
    if (m.rows() == 0) return Matrix::identity(m.cols());
    auto e = rref(m);
    return nullspace_from(e.reduced, e.pivots, m.cols());
}

Matrix column_space(const Matrix& m) {
    if (m.empty()) return Matrix(m.rows(), 0);
    return rref(m.transposed()).reduced.transposed();
}

Matrix left_inverse(const Matrix& b) {
    // Choose the rows of b where it is invertible: the pivot columns of b^T.
    const std::size_t k = b.cols();
    if (k == 0) return Matrix(0, b.rows());
    auto e = rref(b.transposed());
    ensure(e.pivots.size() == k, "left_inverse: basis is not full column rank");
    Matrix square(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) square(i, j) = b(e.pivots[i], j);
    Matrix sinv = inverse(square);
    Matrix out(k, b.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, e.pivots[j]) = sinv(i, j);
    return out;
}

Matrix inverse(const Matrix& m) {
    ensure(m.rows() == m.cols(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto e = rref(Matrix::hstack(m, Matrix::identity(n)));
    ensure(e.pivots.size() == n && (n == 0 || e.pivots[n - 1] == n - 1), "inverse of singular matrix");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
    return out;
}

Matrix coordinates(const Matrix& basis, const Matrix& left_inv, const Matrix& v) {
    Matrix c = left_inv * v;
    ensure(basis * c == v, "coordinates: vector outside the span of the basis");
    return c;
}

bool RowReducer::add(std::vector<Rational> row) {
    ensure(row.size() == cols_, "RowReducer: row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = row[pivots_[i]];
        if (sgn(f) == 0) continue;
        const auto& base = rows_[i];
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(base[c]) != 0) row[c] -= f * base[c];
    }
    std::size_t p = 0;
    while (p < cols_ && sgn(row[p]) == 0) ++p;
    if (p == cols_) return false;
    const Rational inv = 1 / row[p];
    for (std::size_t c = p; c < cols_; ++c)
        if (sgn(row[c]) != 0) row[c] *= inv;
    for (auto& other : rows_) {
        const Rational f = other[p];
        if (sgn(f) == 0) continue;
        for (std::size_t c = p; c < cols_; ++c)
            if (sgn(row[c]) != 0) other[c] -= f * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

Matrix RowReducer::nullspace() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Matrix reduced(rows_.size(), cols_);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) reduced(r, c) = rows_[order[r]][c];
        pivots.push_back(pivots_[order[r]]);
    }
    return nullspace_from(reduced, pivots, cols_);
}

}  // namespace bredon
