#include "srcid/matrix.hpp"

#include <utility>

namespace srcid {

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shapes do not match");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

namespace {

template <class C>
C det_lu(Matrix<C> a) {
    using R = typename C::value_type;
    const std::size_t n = a.rows();
    C result(1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        R best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const R mag = std::abs(a(i, k));
            if (mag > best) {
                best = mag;
                piv = i;
            }
        }
        if (best == R(0)) return C(0, 0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            result = -result;
        }
        const C pivot = a(k, k);
        result *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const C f = a(i, k) / pivot;
            if (f == C(0, 0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return result;
}

Rational det_bareiss(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    Rational sign(1);
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = Rational(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace

template <Scalar T>
T det(const Matrix<T>& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    if constexpr (is_exact_v<T>) {
        return det_bareiss(m);
    } else {
        return det_lu(m);
    }
}

template <Scalar T>
Matrix<T> frobenius_matrix(const std::vector<T>& u, const std::vector<T>& v, const T& lambda, const T& p,
                           const Truncation& trunc) {
    if (u.size() != v.size()) throw DomainError("frobenius_matrix needs |u| = |v|");
    const std::size_t n = u.size();
    const T th_lambda = theta(lambda, p, trunc);
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const T x = u[i] / v[j];
            m(i, j) = checked_div(theta(lambda * x, p, trunc), th_lambda * theta(x, p, trunc));
        }
    }
    return m;
}

template <Scalar T>
T frobenius_closed(const std::vector<T>& u, const std::vector<T>& v, const T& lambda, const T& p,
                   const Truncation& trunc) {
    if (u.size() != v.size()) throw DomainError("frobenius_closed needs |u| = |v|");
    const std::size_t n = u.size();
    T num = theta(lambda * product(u) / product(v), p, trunc);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= u[j] * theta(u[i] / u[j], p, trunc) * theta(v[j] / v[i], p, trunc) / v[j];
        }
    }
    T den = theta(lambda, p, trunc);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) den *= theta(u[i] / v[j], p, trunc);
    return checked_div(num, den);
}

template <Scalar T>
SidePair<T> elliptic_vandermonde_check(const std::vector<T>& u, const T& p, const T& r, const Truncation& trunc) {
    const long n = static_cast<long>(u.size());
    Matrix<T> m(u.size(), u.size());
    for (long j = 1; j <= n; ++j)
        for (long k = 1; k <= n; ++k) m(j - 1, k - 1) = psi_A(j, n, u[k - 1], p, r, trunc);

    T rhs = theta(r * product(u), p, trunc);
    if (!is_zero(p) && n > 0) {
        const T ratio = qpoch_inf(p, p, trunc) / qpoch_inf(ipow(p, n), ipow(p, n), trunc);
        rhs *= ipow(ratio, n);
    }
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) rhs *= u[j] * theta(u[i] / u[j], p, trunc);
    return {det(m), rhs};
}

template <Scalar T>
Matrix<T> cauchy_vandermonde_matrix(const std::vector<T>& u, const std::vector<T>& v) {
    const std::size_t n = u.size();
    const std::size_t m = v.size();
    if (m > n) throw DomainError("cauchy_vandermonde_matrix needs |u| >= |v|");
    Matrix<T> x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < m) {
                x(i, j) = checked_div(from_int<T>(1), v[i] - u[j]);
            } else {
                x(i, j) = ipow(u[j], static_cast<long>(n - 1 - i));
            }
        }
    }
    return x;
}

template <Scalar T>
T cauchy_vandermonde_closed(const std::vector<T>& u, const std::vector<T>& v) {
    const std::size_t n = u.size();
    const std::size_t m = v.size();
    if (m > n) throw DomainError("cauchy_vandermonde_closed needs |u| >= |v|");
    T num = from_int<T>(1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) num *= v[j] - v[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) num *= u[i] - u[j];
    T den = from_int<T>(1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) den *= v[i] - u[k];
    return checked_div(num, den);
}

#define SRCID_INSTANTIATE(T)                                                                                    \
    template Matrix<T> multiply<T>(const Matrix<T>&, const Matrix<T>&);                                        \
    template T det<T>(const Matrix<T>&);                                                                       \
    template Matrix<T> frobenius_matrix<T>(const std::vector<T>&, const std::vector<T>&, const T&, const T&,   \
                                           const Truncation&);                                                 \
    template T frobenius_closed<T>(const std::vector<T>&, const std::vector<T>&, const T&, const T&,           \
                                   const Truncation&);                                                         \
    template SidePair<T> elliptic_vandermonde_check<T>(const std::vector<T>&, const T&, const T&,              \
                                                       const Truncation&);                                     \
    template Matrix<T> cauchy_vandermonde_matrix<T>(const std::vector<T>&, const std::vector<T>&);             \
    template T cauchy_vandermonde_closed<T>(const std::vector<T>&, const std::vector<T>&);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(ComplexLD)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

}  // namespace srcid
