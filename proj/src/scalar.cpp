#include "srcid/scalar.hpp"

#include <cmath>

namespace srcid {

int Truncation::terms_for(double modulus, double leading) const {
    if (modulus == 0.0) return 1;
    if (modulus > kMaxNome) throw DomainError("nome modulus exceeds 0.9");
    // the tail starts once leading * modulus^j drops below epsilon
    const double lead = leading > 1.0 ? std::ceil(std::log(leading) / -std::log(modulus)) : 0.0;
    const double n = std::ceil(std::log(epsilon) / std::log(modulus)) + lead + guard_terms;
    return static_cast<int>(std::min<double>(std::max(n, 1.0), max_terms));
}

template <Scalar T>
T qpoch_inf(const T& u, const T& q, const Truncation& trunc) {
    if constexpr (is_exact_v<T>) {
        (void)u, (void)q, (void)trunc;
        throw DomainError("qpoch_inf is unavailable over the exact field");
    } else {
        const int n = trunc.terms_for(magnitude(q), magnitude(u));
        const T one = from_int<T>(1);
        T acc = one;
        T x = u;
        for (int j = 0; j < n; ++j) {
            acc *= one - x;
            x *= q;
        }
        return acc;
    }
}

template <Scalar T>
T qpoch_n(const T& u, const T& q, long n) {
    const T one = from_int<T>(1);
    if (n >= 0) {
        T acc = one;
        T x = u;
        for (long j = 0; j < n; ++j) {
            acc *= one - x;
            x *= q;
        }
        return acc;
    }
    if (is_zero(q)) throw SingularError("qpoch_n with negative length needs q != 0");
    const T qinv = one / q;
    T acc = one;
    T x = u;
    for (long j = 1; j <= -n; ++j) {
        x *= qinv;
        acc *= one - x;
    }
    return checked_div(one, acc);
}

template <Scalar T>
T theta(const T& u, const T& p, const Truncation& trunc) {
    if (is_zero(u)) throw DomainError("theta at u = 0");
    const T one = from_int<T>(1);
    if (is_zero(p)) return one - u;
    if constexpr (is_exact_v<T>) {
        throw DomainError("theta over the exact field requires p = 0");
    } else {
        const int n = trunc.terms_for(magnitude(p), std::max(magnitude(u), magnitude(p / u)));
        T acc = one;
        T a = u;
        T b = p / u;
        for (int j = 0; j < n; ++j) {
            acc *= (one - a) * (one - b);
            a *= p;
            b *= p;
        }
        return acc;
    }
}

template <Scalar T>
T q_integer(long n, const T& q) {
    if (n < 0) throw DomainError("q_integer needs n >= 0");
    T acc = from_int<T>(0);
    T x = from_int<T>(1);
    for (long j = 0; j < n; ++j) {
        acc += x;
        x *= q;
    }
    return acc;
}

template <Scalar T>
T q_factorial(long n, const T& q) {
    T acc = from_int<T>(1);
    for (long k = 2; k <= n; ++k) acc *= q_integer(k, q);
    return acc;
}

namespace {

// Pascal recursion; used when q is a root of unity and the product ratio
// degenerates to 0/0.
template <Scalar T>
T q_binomial_pascal(long n, long l, const T& q) {
    std::vector<T> row(static_cast<size_t>(l + 1), from_int<T>(0));
    row[0] = from_int<T>(1);
    for (long k = 1; k <= n; ++k) {
        for (long j = std::min(k, l); j >= 1; --j) {
            row[j] = row[j] + ipow(q, k - j) * row[j - 1];
        }
    }
    return row[l];
}

}  // namespace

template <Scalar T>
T q_binomial(long n, long l, const T& q) {
    if (l < 0 || l > n) throw DomainError("q_binomial needs 0 <= l <= n");
    T num = from_int<T>(1);
    T den = from_int<T>(1);
    for (long k = 1; k <= l; ++k) {
        num *= q_integer(n - l + k, q);
        den *= q_integer(k, q);
    }
    if (is_zero(den)) return q_binomial_pascal(n, l, q);
    return num / den;
}

template <Scalar T>
T sym_q_number(long n, const T& s) {
    const T one = from_int<T>(1);
    if (is_zero(s) || s == one || s == -one) throw DomainError("sym_q_number needs s not in {0, 1, -1}");
    const T sinv = one / s;
    return (ipow(s, n) - ipow(sinv, n)) / (s - sinv);
}

template <Scalar T>
T sym_q_factorial(long n, const T& s) {
    if (n < 0) throw DomainError("sym_q_factorial needs n >= 0");
    T acc = from_int<T>(1);
    for (long j = 2; j <= n; ++j) acc *= sym_q_number(j, s);
    return acc;
}

template <Scalar T>
T psi_A(long j, long n, const T& u, const T& p, const T& r, const Truncation& trunc) {
    if (j < 1 || j > n) throw DomainError("psi_A needs 1 <= j <= n");
    const T sign = from_int<T>((n - 1) % 2 == 0 ? 1 : -1);
    if (is_zero(p)) {
        if (j == 1) return from_int<T>(1) - sign * r * ipow(u, n);
        return ipow(u, j - 1);
    }
    return ipow(u, j - 1) * theta(ipow(p, j - 1) * sign * r * ipow(u, n), ipow(p, n), trunc);
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long acc = 1;
    for (long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

long factorial(long n) {
    long acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

#define SRCID_INSTANTIATE(T)                                                   \
    template T qpoch_inf<T>(const T&, const T&, const Truncation&);          \
    template T qpoch_n<T>(const T&, const T&, long);                         \
    template T theta<T>(const T&, const T&, const Truncation&);              \
    template T q_integer<T>(long, const T&);                                 \
    template T q_factorial<T>(long, const T&);                               \
    template T q_binomial<T>(long, long, const T&);                          \
    template T sym_q_number<T>(long, const T&);                              \
    template T sym_q_factorial<T>(long, const T&);                           \
    template T psi_A<T>(long, long, const T&, const T&, const T&, const Truncation&);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(ComplexLD)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

}  // namespace srcid
