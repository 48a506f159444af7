#ifndef NILCERT_LINALG_MATRIX_HPP
#define NILCERT_LINALG_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nilcert {

/// Dense row-major matrix over an exact field F. F needs the field operators,
/// equality, is_zero() and construction from long.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<F> row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Row vector times matrix.
template <class F>
std::vector<F> row_times(std::span<const F> x, const Matrix<F>& m) {
    if (x.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector/matrix shape mismatch");
    std::vector<F> out(m.cols(), F(0));
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(k, j).is_zero()) out[j] += x[k] * m(k, j);
    }
    return out;
}

template <class F>
struct Echelon {
    Matrix<F> matrix;                 // reduced row echelon form, zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// Fraction-free (Bareiss) forward elimination. The pivot of each column is the
// first nonzero entry at or below the current row. Returns the last pivot,
// which equals +-det for a full-rank square input.
template <class F>
F bareiss_forward(Matrix<F>& m, std::vector<std::size_t>& pivots, bool& swapped_odd) {
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            swapped_odd = !swapped_odd;
        }
        const F piv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const F factor = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                F v = piv * m(i, j);
                if (!factor.is_zero() && !m(r, j).is_zero()) v -= factor * m(r, j);
                m(i, j) = prev.is_one() ? std::move(v) : v / prev;
            }
            m(i, c) = F(0);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return prev;
}

}  // namespace detail

/// Rows are folded in one at a time against the reduced basis built so far,
/// so intermediate entries stay entries of reduced echelon forms.
template <class F>
Echelon<F> reduced_row_echelon(const Matrix<F>& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<F>> basis;  // kept sorted by pivot column
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < m.rows() && basis.size() < n; ++r) {
        std::vector<F> v(m.row(r).begin(), m.row(r).end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const F factor = v[pivots[b]];
            if (factor.is_zero()) continue;
            for (std::size_t j = pivots[b]; j < n; ++j)
                if (!basis[b][j].is_zero()) v[j] -= factor * basis[b][j];
        }
        std::size_t c = 0;
        while (c < n && v[c].is_zero()) ++c;
        if (c == n) continue;
        const F inv = F(1) / v[c];
        for (std::size_t j = c; j < n; ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const F factor = basis[b][c];
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j)
                if (!v[j].is_zero()) basis[b][j] -= factor * v[j];
        }
        auto pos = static_cast<std::size_t>(std::lower_bound(pivots.begin(), pivots.end(), c) - pivots.begin());
        pivots.insert(pivots.begin() + static_cast<long>(pos), c);
        basis.insert(basis.begin() + static_cast<long>(pos), std::move(v));
    }
    Echelon<F> e;
    e.matrix = Matrix<F>(m.rows(), n);
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t j = 0; j < n; ++j) e.matrix(b, j) = std::move(basis[b][j]);
    e.pivots = std::move(pivots);
    return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return reduced_row_echelon(m).rank();
}

template <class F>
F determinant(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    if (m.rows() == 0) return F(1);
    Matrix<F> w = m;
    std::vector<std::size_t> pivots;
    bool odd = false;
    F last = detail::bareiss_forward(w, pivots, odd);
    if (pivots.size() < m.rows()) return F(0);
    return odd ? -last : last;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    Echelon<F> e = reduced_row_echelon(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.matrix(i, n + j);
    return out;
}

/// Basis of {x : m x = 0}, returned as the rows of a reduced echelon matrix.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
    Echelon<F> e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix<F>(0, m.cols());
    Echelon<F> k = reduced_row_echelon(Matrix<F>::from_rows(basis, m.cols()));
    return k.matrix;
}

}  // namespace nilcert

#endif
