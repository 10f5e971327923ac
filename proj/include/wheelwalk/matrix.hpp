#pragma once

// Dense row-major matrix over an exact scalar type, plus the exact linear
// algebra the engines need: determinant, minors, solve and inverse.
//
// Indices are 0-based in the API. Elimination is plain Gaussian elimination
// over Rationals with the first nonzero entry as pivot; zero entries in the
// pivot column and pivot row are skipped, so banded and bordered matrices
// (every matrix this library builds) eliminate in roughly O(n^2) time.

#include "number.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wheelwalk {

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init)
        : Matrix(init.size(), init.size() ? init.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
            std::size_t j = 0;
            for (const auto& v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const T> row(std::size_t i) const {
        return std::span<const T>(data_).subspan(i * cols_, cols_);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Zero entries of the left operand are skipped.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> x) {
        if (a.cols_ != x.size()) throw ShapeError("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0) out[i] += a(i, j) * x[j];
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        return a * std::span<const T>(x);
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.data_) v *= s;
        return m;
    }

    /// Copy with row `drop_row` and column `drop_col` removed.
    [[nodiscard]] Matrix without(std::size_t drop_row, std::size_t drop_col) const {
        if (drop_row >= rows_ || drop_col >= cols_) throw ShapeError("row/column index out of range");
        if (rows_ < 2 || cols_ < 2) throw ShapeError("cannot delete from a 1-wide matrix");
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

namespace linalg {

namespace detail {

inline void require_square(const ExactMatrix& m, const char* what) {
    if (!m.square())
        throw ShapeError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
}

// Forward elimination of the augmented system [m | rhs] to upper-triangular
// form. Returns the determinant of m, or 0 if m is singular (in which case
// the working matrix is left partially reduced).
inline Rational eliminate(ExactMatrix& m, ExactMatrix* rhs) {
    const std::size_t n = m.rows();
    Rational det = 1;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> rhs_cols;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            if (rhs)
                for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(k, j), (*rhs)(p, j));
            det = -det;
        }
        const Rational pivot = m(k, k);
        det *= pivot;

        pivot_cols.clear();
        for (std::size_t j = k + 1; j < n; ++j)
            if (m(k, j) != 0) pivot_cols.push_back(j);
        rhs_cols.clear();
        if (rhs)
            for (std::size_t j = 0; j < rhs->cols(); ++j)
                if ((*rhs)(k, j) != 0) rhs_cols.push_back(j);

        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational factor = m(i, k) / pivot;
            m(i, k) = 0;
            for (std::size_t j : pivot_cols) m(i, j) -= factor * m(k, j);
            for (std::size_t j : rhs_cols) (*rhs)(i, j) -= factor * (*rhs)(k, j);
        }
    }
    return det;
}

// Back substitution on an upper-triangular m with nonzero diagonal.
inline void back_substitute(const ExactMatrix& m, ExactMatrix& rhs) {
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc = rhs(ii, c);
            for (std::size_t j = ii + 1; j < n; ++j)
                if (m(ii, j) != 0 && rhs(j, c) != 0) acc -= m(ii, j) * rhs(j, c);
            rhs(ii, c) = acc / m(ii, ii);
        }
    }
}

}  // namespace detail

/// Exact determinant. Throws ShapeError for non-square input.
inline Rational determinant(ExactMatrix m) {
    detail::require_square(m, "determinant");
    return detail::eliminate(m, nullptr);
}

/// Determinant of m with one row and one column deleted (unsigned; apply
/// (-1)^{i+j} yourself for a signed cofactor). A 1x1 matrix has the empty
/// minor, whose determinant is 1.
inline Rational minor_determinant(const ExactMatrix& m, std::size_t drop_row, std::size_t drop_col) {
    detail::require_square(m, "minor_determinant");
    if (drop_row >= m.rows() || drop_col >= m.cols())
        throw ShapeError("minor_determinant: index (" + std::to_string(drop_row) + ", " +
                         std::to_string(drop_col) + ") out of range for " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() == 1) return 1;
    return determinant(m.without(drop_row, drop_col));
}

/// Exact x with m x = b. Throws ShapeError or SingularMatrixError.
inline RationalVector solve(ExactMatrix m, std::span<const Rational> b) {
    detail::require_square(m, "solve");
    if (b.size() != m.rows())
        throw ShapeError("solve: right-hand side has length " + std::to_string(b.size()) +
                         ", expected " + std::to_string(m.rows()));
    ExactMatrix rhs(m.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (detail::eliminate(m, &rhs) == 0) throw SingularMatrixError("solve: matrix is singular");
    detail::back_substitute(m, rhs);
    RationalVector x(m.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

inline RationalVector solve(ExactMatrix m, const RationalVector& b) {
    return solve(std::move(m), std::span<const Rational>(b));
}

/// Exact inverse. Throws ShapeError or SingularMatrixError.
inline ExactMatrix invert(ExactMatrix m) {
    detail::require_square(m, "invert");
    ExactMatrix rhs = ExactMatrix::identity(m.rows());
    if (detail::eliminate(m, &rhs) == 0) throw SingularMatrixError("invert: matrix is singular");
    detail::back_substitute(m, rhs);
    return rhs;
}

}  // namespace linalg
}  // namespace wheelwalk
