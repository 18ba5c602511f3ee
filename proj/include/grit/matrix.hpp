#pragma once

#include "grit/error.hpp"
#include "grit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace grit {

/// Dense row-major matrix over a commutative coefficient ring C.
template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, C(Rational(0))) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = C(Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    C& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<C> column(std::size_t j) const {
        std::vector<C> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }
    std::vector<C> row(std::size_t i) const {
        return std::vector<C>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch");
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const C& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!is_zero(y(k, j))) out(i, j) = out(i, j) + xik * y(k, j);
            }
        return out;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix shape mismatch");
        Matrix out = x;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = out.a_[k] + y.a_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix shape mismatch");
        Matrix out = x;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = out.a_[k] - y.a_[k];
        return out;
    }
    friend Matrix operator*(const Rational& c, Matrix m) {
        for (auto& v : m.a_) v = v * c;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    /// Maps every entry through f.
    template <class D, class F>
    Matrix<D> map(F f) const {
        Matrix<D> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<C> a_;
};

/// Determinant by Laplace expansion along the first row; fine for n <= 6
/// over any coefficient ring.
template <class C>
C det_laplace(const Matrix<C>& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return C(Rational(1));
    if (n == 1) return m(0, 0);
    C acc(Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        Matrix<C> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        C term = m(0, j) * det_laplace(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

using QMatrix = Matrix<Rational>;

Rational determinant(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Throws DomainError if singular.
QMatrix inverse(const QMatrix& m);
/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
/// Some solution of m x = b, or nothing if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);

}  // namespace grit
