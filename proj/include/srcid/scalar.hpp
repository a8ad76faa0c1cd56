#pragma once

#include "srcid/field.hpp"

namespace srcid {

// Truncation policy for infinite products in the nome p (or base q).
struct Truncation {
    double epsilon = 1e-14;
    int max_terms = 10000;
    int guard_terms = 8;

    // Number of factors kept for a product in a base of modulus `modulus`
    // whose first factor is 1 - x with |x| = leading.
    int terms_for(double modulus, double leading = 1.0) const;
};

inline constexpr double kMaxNome = 0.9;

// (u;q)_inf, complex field only.
template <Scalar T>
T qpoch_inf(const T& u, const T& q, const Truncation& trunc = {});

// (u;q)_n for any integer n, negative n via the reciprocal form.
template <Scalar T>
T qpoch_n(const T& u, const T& q, long n);

// Odd theta function (u;p)_inf (p/u;p)_inf. Exact field only at p = 0.
template <Scalar T>
T theta(const T& u, const T& p, const Truncation& trunc = {});

// [n]_q = 1 + q + ... + q^{n-1}, n >= 0.
template <Scalar T>
T q_integer(long n, const T& q);

template <Scalar T>
T q_factorial(long n, const T& q);

// Gaussian binomial [n, l]_q, 0 <= l <= n.
template <Scalar T>
T q_binomial(long n, long l, const T& q);

// (n)_t = (s^n - s^{-n}) / (s - s^{-1}) with s = t^{1/2}.
template <Scalar T>
T sym_q_number(long n, const T& s);

template <Scalar T>
T sym_q_factorial(long n, const T& s);

// psi_j^{A_{n-1}}(u; p, r) = u^{j-1} theta(p^{j-1} (-1)^{n-1} r u^n; p^n).
template <Scalar T>
T psi_A(long j, long n, const T& u, const T& p, const T& r, const Truncation& trunc = {});

long binomial(long n, long k);
long factorial(long n);

}  // namespace srcid
