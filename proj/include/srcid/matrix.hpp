#pragma once

#include <cstddef>
#include <vector>

#include "srcid/field.hpp"
#include "srcid/scalar.hpp"

namespace srcid {

// Dense row-major matrix over either field.
template <Scalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, from_int<T>(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<T>(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b);

// Complex: LU with partial pivoting. Exact: Bareiss elimination.
// Singular input gives 0. The 0x0 determinant is 1.
template <Scalar T>
T det(const Matrix<T>& m);

/*
 * Closed-form determinant evaluations.
 *
 * frobenius_matrix:  entries theta(L u_i/v_j) / (theta(L) theta(u_i/v_j)).
 * frobenius_closed:  its factorized value.
 * elliptic_vandermonde_check: (det psi_j(u_k), factorized form).
 * cauchy_vandermonde_matrix (n >= m): rows 1/(v_i - u_j) for i <= m,
 *   then monomial rows u_j^{n-i}.
 */
template <Scalar T>
Matrix<T> frobenius_matrix(const std::vector<T>& u, const std::vector<T>& v, const T& lambda, const T& p,
                           const Truncation& trunc = {});

template <Scalar T>
T frobenius_closed(const std::vector<T>& u, const std::vector<T>& v, const T& lambda, const T& p,
                   const Truncation& trunc = {});

template <Scalar T>
struct SidePair {
    T lhs;
    T rhs;
};

template <Scalar T>
SidePair<T> elliptic_vandermonde_check(const std::vector<T>& u, const T& p, const T& r, const Truncation& trunc = {});

template <Scalar T>
Matrix<T> cauchy_vandermonde_matrix(const std::vector<T>& u, const std::vector<T>& v);

template <Scalar T>
T cauchy_vandermonde_closed(const std::vector<T>& u, const std::vector<T>& v);

}  // namespace srcid
