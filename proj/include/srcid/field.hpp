#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <vector>

#include "srcid/errors.hpp"
#include "srcid/rational.hpp"

namespace srcid {

using Complex = std::complex<double>;
// Extended precision for ill-conditioned determinant checks; only the scalar
// and linear-algebra kernels are instantiated for it.
using ComplexLD = std::complex<long double>;

template <class T>
concept Scalar = std::same_as<T, Complex> || std::same_as<T, ComplexLD> || std::same_as<T, Rational>;

enum class FieldKind { Complex, Exact };

template <Scalar T>
struct FieldTraits;

template <>
struct FieldTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr FieldKind kind = FieldKind::Complex;
    static constexpr const char* name = "complex";
};

template <>
struct FieldTraits<ComplexLD> {
    static constexpr bool exact = false;
    static constexpr FieldKind kind = FieldKind::Complex;
    static constexpr const char* name = "complex";
};

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr FieldKind kind = FieldKind::Exact;
    static constexpr const char* name = "exact";
};

template <Scalar T>
inline constexpr bool is_exact_v = FieldTraits<T>::exact;

template <Scalar T>
T from_int(long n) {
    if constexpr (is_exact_v<T>) {
        return Rational(n);
    } else {
        return T(static_cast<typename T::value_type>(n));
    }
}

template <Scalar T>
T from_ratio(long num, long den) {
    if constexpr (is_exact_v<T>) {
        return Rational(num, den);
    } else {
        if (den == 0) throw SingularError("ratio with zero denominator");
        using R = typename T::value_type;
        return T(static_cast<R>(num) / static_cast<R>(den));
    }
}

inline double magnitude(const Complex& x) { return std::abs(x); }
inline double magnitude(const ComplexLD& x) { return static_cast<double>(std::abs(x)); }
inline double magnitude(const Rational& x) { return std::fabs(x.to_double()); }

inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
inline bool is_zero(const ComplexLD& x) { return x == ComplexLD(0.0L, 0.0L); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline bool is_finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
inline bool is_finite(const ComplexLD& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
inline bool is_finite(const Rational&) { return true; }

inline std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Complex& x);

// a / b, rejecting denominators within tol of zero (exact field: literal zero).
template <Scalar T>
T checked_div(const T& a, const T& b, double tol = 0.0) {
    if (is_zero(b) || (!is_exact_v<T> && magnitude(b) <= tol)) {
        throw SingularError("division by a near-zero element");
    }
    return a / b;
}

template <Scalar T>
T ipow(T x, long n) {
    if (n < 0) return checked_div(from_int<T>(1), ipow(std::move(x), -n));
    T result = from_int<T>(1);
    while (n > 0) {
        if (n & 1) result *= x;
        n >>= 1;
        if (n > 0) x *= x;
    }
    return result;
}

// |a-b| / max(1,|a|,|b|); exact field returns 0 iff the values are equal.
template <Scalar T>
double relative_residual(const T& a, const T& b) {
    if constexpr (is_exact_v<T>) {
        if (a == b) return 0.0;
        const double scale = std::max({1.0, magnitude(a), magnitude(b)});
        const double r = magnitude(a - b) / scale;
        return r > 0.0 ? r : 1e-300;  // unequal but below double resolution
    } else {
        const double scale = std::max({1.0, magnitude(a), magnitude(b)});
        return magnitude(a - b) / scale;
    }
}

template <Scalar T>
bool close(const T& a, const T& b, double tol) {
    if constexpr (is_exact_v<T>) {
        return a == b;
    } else {
        return relative_residual(a, b) <= tol;
    }
}

template <Scalar T>
T product(const std::vector<T>& xs) {
    T acc = from_int<T>(1);
    for (const T& x : xs) acc *= x;
    return acc;
}

}  // namespace srcid
