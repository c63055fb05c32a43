#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense exact matrices: determinants, characteristic polynomials,
 *        companion and Kronecker constructions
 */

#include "quadrantal/core.hpp"
#include "quadrantal/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace quadrantal {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Matrix operator*(const T& s, const Matrix& a)
    {
        Matrix c = a;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    T trace() const
    {
        T t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) elimination; every division is exact.
template <class T>
T determinant(Matrix<T> a)
{
    const std::size_t n = a.rows();
    if (n != a.cols()) throw precondition_error("determinant of a non-square matrix");
    if (n == 0) return T(1);
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// det(xI - A) by Faddeev-LeVerrier; exact over Q.
inline RationalPolynomial characteristic_polynomial(const Matrix<Rational>& a)
{
    const std::size_t n = a.rows();
    if (n != a.cols()) throw precondition_error("characteristic polynomial of a non-square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> m(n, n);
    const Matrix<Rational> id = Matrix<Rational>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        c[n - k] = -(a * m).trace() / Rational(static_cast<long long>(k));
    }
    return RationalPolynomial(std::move(c));
}

inline Matrix<Rational> to_rational(const Matrix<BigInt>& a)
{
    Matrix<Rational> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

/**
 * Companion matrix of a monic polynomial x^n + c_{n-1}x^{n-1} + ... + c_0:
 * ones on the subdiagonal and -c_i in the last column, so that column j is the
 * coordinate vector of x * x^j modulo the polynomial.
 */
template <class T>
Matrix<T> companion_matrix(const Polynomial<T>& p)
{
    if (!p.is_monic() || p.degree() < 1) throw precondition_error("companion matrix needs a monic nonconstant polynomial");
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix<T> m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = T(1);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p[i];
    return m;
}

template <class T>
Matrix<T> kronecker_product(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

/// A (x) I + I (x) B; eigenvalues are all sums of eigenvalues of A and B.
template <class T>
Matrix<T> kronecker_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    return kronecker_product(a, Matrix<T>::identity(b.rows())) + kronecker_product(Matrix<T>::identity(a.rows()), b);
}

/// q(A) by Horner's rule.
template <class T>
Matrix<T> evaluate(const Polynomial<T>& q, const Matrix<T>& a)
{
    const std::size_t n = a.rows();
    Matrix<T> acc(n, n);
    const Matrix<T> id = Matrix<T>::identity(n);
    for (auto it = q.coefficients().rbegin(); it != q.coefficients().rend(); ++it) acc = acc * a + (*it) * id;
    return acc;
}

} // namespace quadrantal
