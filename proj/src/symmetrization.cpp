#include "srcid/symmetrization.hpp"

#include <algorithm>
#include <numeric>

#include "srcid/source.hpp"

namespace srcid {

template <Scalar T>
UniPoly<T>::UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.size() > kMaxPolyDegree + 1) throw SizeError("polynomial degree above 12");
}

template <Scalar T>
T UniPoly<T>::leading() const {
    return coeffs_.empty() ? from_int<T>(0) : coeffs_.back();
}

template <Scalar T>
T UniPoly<T>::operator()(const T& x) const {
    T acc = from_int<T>(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

template <Scalar T>
T divided_difference(const MultiFunction<T>& f, const std::vector<T>& u, std::size_t k) {
    if (k < 1 || k >= u.size()) throw DomainError("divided difference index out of range");
    if (u[k - 1] == u[k]) throw SingularError("coincident arguments in divided difference");
    std::vector<T> swapped = u;
    std::swap(swapped[k - 1], swapped[k]);
    return (f(u) - f(swapped)) / (u[k - 1] - u[k]);
}

template <Scalar T>
T newton_chain(const UniFunction<T>& f, const std::vector<T>& u) {
    const std::size_t n = u.size();
    if (n == 0) throw DomainError("newton_chain needs at least one point");
    std::vector<T> table;
    table.reserve(n);
    for (const T& x : u) table.push_back(f(x));
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            table[i] = checked_div(table[i] - table[i - 1], u[i] - u[i - level]);
        }
    }
    return table[n - 1];
}

template <Scalar T>
T newton_chain(const UniPoly<T>& f, const std::vector<T>& u) {
    return newton_chain<T>(UniFunction<T>([&f](const T& x) { return f(x); }), u);
}

template <Scalar T>
T operator_chain(const UniFunction<T>& f, const std::vector<T>& u) {
    if (u.empty()) throw DomainError("operator_chain needs at least one point");
    MultiFunction<T> g = [f](const std::vector<T>& x) { return f(x[0]); };
    for (std::size_t k = 1; k < u.size(); ++k) {
        g = [g, k](const std::vector<T>& x) { return divided_difference(g, x, k); };
    }
    return g(u);
}

template <Scalar T>
T delta_factor(const std::vector<T>& u, const std::vector<std::size_t>& k, const T& c) {
    T acc = from_int<T>(1);
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            const T d = u[k[i]] - u[k[j]];
            acc *= checked_div(d - c, d);
        }
    }
    return acc;
}

template <Scalar T>
T sym_c(const MultiFunction<T>& g, const std::vector<T>& u, const T& c) {
    const std::size_t n = u.size();
    if (n > kMaxSymSize) throw SizeError("Sym_c limited to 8 variables");
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<T> permuted(n);
    T acc = from_int<T>(0);
    do {
        for (std::size_t i = 0; i < n; ++i) permuted[i] = u[w[i]];
        acc += delta_factor(u, w, c) * g(permuted);
    } while (std::next_permutation(w.begin(), w.end()));
    return acc;
}

template <Scalar T>
MultiFunction<T> theta_shift(MultiFunction<T> g, std::size_t s, T c) {
    return [g = std::move(g), s, c](const std::vector<T>& u) {
        const std::size_t n = u.size();
        std::vector<T> shifted(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t idx = k + s;
            shifted[k] = idx < n ? u[idx] : u[idx % n] + c * from_int<T>(static_cast<long>(idx / n));
        }
        return g(shifted);
    };
}

namespace {

template <Scalar T>
void require_lascoux(const std::vector<T>& u, const std::vector<T>& v, std::size_t min_n, std::size_t max_n) {
    if (u.size() != v.size()) throw DomainError("Lascoux formulas need |u| = |v|");
    if (u.size() < min_n) throw DomainError("Lascoux formula below its minimal size");
    if (u.size() > max_n) throw SizeError("Lascoux formula above its size cap");
}

template <Scalar T>
T theorem3_lhs(const std::vector<T>& u, const std::vector<T>& v, const T& c, const UniFunction<T>& f) {
    const std::size_t n = u.size();
    MultiFunction<T> g = [&v, f](const std::vector<T>& x) {
        T acc = f(x[0]);
        for (std::size_t j = 1; j < x.size(); ++j)
            for (const T& vk : v) acc *= x[j] - vk;
        return acc;
    };
    std::vector<MultiFunction<T>> shifted;
    for (std::size_t s = 0; s < n; ++s) shifted.push_back(theta_shift(g, s, c));
    MultiFunction<T> h = [&shifted, n](const std::vector<T>& x) {
        T acc = from_int<T>(0);
        for (std::size_t s = 0; s < n; ++s) {
            const long coeff = (s % 2 == 0 ? 1 : -1) * binomial(static_cast<long>(n) - 1, static_cast<long>(s));
            acc += from_int<T>(coeff) * shifted[s](x);
        }
        return acc;
    };
    return sym_c(h, u, c);
}

// prod_{i<j} (v_j - v_i) prod_{i<j} (u_i - u_j)
template <Scalar T>
T double_vandermonde(const std::vector<T>& u, const std::vector<T>& v) {
    T acc = from_int<T>(1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) acc *= (v[j] - v[i]) * (u[i] - u[j]);
    }
    return acc;
}

template <Scalar T>
T p_at_z_one(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    return rational_source(RationalParams<T>{c, from_int<T>(1), u, v}, Side::P);
}

}  // namespace

template <Scalar T>
SymPair<T> lascoux_theorem3(const std::vector<T>& u, const std::vector<T>& v, const T& c, const UniFunction<T>& f) {
    require_lascoux(u, v, 2, 7);
    const std::size_t n = u.size();
    T num = from_int<T>(factorial(static_cast<long>(n) - 1)) * ipow(-c, static_cast<long>(n) - 1);
    Matrix<T> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const T a = v[j] - u[k];
            const T b = a - c;
            num *= a * b;
            m(j, k) = checked_div(from_int<T>(1), a * b);
        }
    }
    const T rhs = checked_div(num, double_vandermonde(u, v)) * det(m) * newton_chain(f, u);
    return {theorem3_lhs(u, v, c, f), rhs};
}

template <Scalar T>
SymPair<T> lascoux_theorem3_via_source(const std::vector<T>& u, const std::vector<T>& v, const T& c,
                                       const UniFunction<T>& f) {
    require_lascoux(u, v, 2, 7);
    const long n = static_cast<long>(u.size());
    const T rhs = checked_div(from_int<T>(factorial(n - 1)), -c) * p_at_z_one(u, v, c) * newton_chain(f, u);
    return {theorem3_lhs(u, v, c, f), rhs};
}

template <Scalar T>
SymPair<T> lascoux_reduction(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    require_lascoux(u, v, 1, 7);
    const std::size_t n = u.size();
    T lhs = from_int<T>(0);
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<T> x(n);
    for (std::size_t ell = 1; ell <= n; ++ell) {
        // (ell, 2, ..., ell-1, 1, ell+1, ..., n), 0-based
        std::vector<std::size_t> order;
        if (ell == 1) {
            for (std::size_t i = 0; i < n; ++i) order.push_back(i);
        } else {
            order.push_back(ell - 1);
            for (std::size_t i = 1; i + 1 < ell; ++i) order.push_back(i);
            order.push_back(0);
            for (std::size_t i = ell; i < n; ++i) order.push_back(i);
        }
        const long sign = (ell % 2 == 1) ? 1 : -1;
        const T coeff = from_int<T>(sign * binomial(static_cast<long>(n) - 1, static_cast<long>(ell) - 1));
        std::iota(w.begin() + 1, w.end(), 1);
        do {
            for (std::size_t i = 0; i < n; ++i) x[i] = u[w[i]];
            T term = delta_factor(x, order, c);
            for (std::size_t j = ell; j < n; ++j)
                for (const T& vk : v) term *= x[j] - vk;
            for (std::size_t j = 1; j < ell; ++j)
                for (const T& vk : v) term *= x[j] - vk + c;
            lhs += coeff * term;
        } while (std::next_permutation(w.begin() + 1, w.end()));
    }
    T den = -c;
    for (std::size_t j = 1; j < n; ++j) den *= u[0] - u[j];
    const T rhs = checked_div(from_int<T>(factorial(static_cast<long>(n) - 1)), den) * p_at_z_one(u, v, c);
    return {lhs, rhs};
}

namespace {

template <Scalar T>
T theorem4_lhs(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    const std::size_t n = u.size();
    MultiFunction<T> h = [&v, &c, n](const std::vector<T>& x) {
        std::vector<T> a(n);
        for (std::size_t j = 0; j < n; ++j) {
            a[j] = from_int<T>(1);
            for (const T& vk : v) a[j] *= checked_div(x[j] - vk - c, x[j] - vk);
        }
        // tau^m keeps the factors of u_{m+1}, ..., u_n
        T acc = from_int<T>(0);
        T tail = from_int<T>(1);
        for (std::size_t m = n + 1; m-- > 0;) {
            if (m < n) tail *= a[m];
            const long coeff = (m % 2 == 0 ? 1 : -1) * binomial(static_cast<long>(n), static_cast<long>(m));
            acc += from_int<T>(coeff) * tail;
        }
        return acc;
    };
    return sym_c(h, u, c);
}

}  // namespace

template <Scalar T>
SymPair<T> lascoux_theorem4(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    require_lascoux(u, v, 1, 7);
    const std::size_t n = u.size();
    T num = from_int<T>(factorial(static_cast<long>(n))) * ipow(c, static_cast<long>(n));
    Matrix<T> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const T a = v[j] - u[k];
            num *= a + c;
            m(j, k) = checked_div(from_int<T>(1), (a + c) * a);
        }
    }
    const T rhs = checked_div(num, double_vandermonde(u, v)) * det(m);
    return {theorem4_lhs(u, v, c), rhs};
}

template <Scalar T>
SymPair<T> lascoux_theorem4_via_source(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    require_lascoux(u, v, 1, 7);
    const std::size_t n = u.size();
    T den = from_int<T>(1);
    std::vector<T> shifted;
    for (const T& vk : v) shifted.push_back(vk + c);
    for (const T& uj : u)
        for (const T& vk : v) den *= uj - vk;
    const T rhs = checked_div(from_int<T>(factorial(static_cast<long>(n))), den) * p_at_z_one(u, shifted, c);
    return {theorem4_lhs(u, v, c), rhs};
}

#define SRCID_INSTANTIATE(T)                                                                                  \
    template class UniPoly<T>;                                                                               \
    template T divided_difference<T>(const MultiFunction<T>&, const std::vector<T>&, std::size_t);           \
    template T newton_chain<T>(const UniFunction<T>&, const std::vector<T>&);                                \
    template T newton_chain<T>(const UniPoly<T>&, const std::vector<T>&);                                    \
    template T operator_chain<T>(const UniFunction<T>&, const std::vector<T>&);                              \
    template T delta_factor<T>(const std::vector<T>&, const std::vector<std::size_t>&, const T&);            \
    template T sym_c<T>(const MultiFunction<T>&, const std::vector<T>&, const T&);                           \
    template MultiFunction<T> theta_shift<T>(MultiFunction<T>, std::size_t, T);                              \
    template SymPair<T> lascoux_theorem3<T>(const std::vector<T>&, const std::vector<T>&, const T&,          \
                                            const UniFunction<T>&);                                          \
    template SymPair<T> lascoux_theorem3_via_source<T>(const std::vector<T>&, const std::vector<T>&,         \
                                                       const T&, const UniFunction<T>&);                     \
    template SymPair<T> lascoux_reduction<T>(const std::vector<T>&, const std::vector<T>&, const T&);        \
    template SymPair<T> lascoux_theorem4<T>(const std::vector<T>&, const std::vector<T>&, const T&);         \
    template SymPair<T> lascoux_theorem4_via_source<T>(const std::vector<T>&, const std::vector<T>&, const T&);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

}  // namespace srcid
