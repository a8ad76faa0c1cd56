#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "srcid/field.hpp"
#include "srcid/matrix.hpp"

namespace testing {

using srcid::Complex;
using srcid::Rational;

inline Rational Q(long num, long den = 1) { return Rational(num, den); }

// Nonzero rationals num/den with |num|, den <= bound.
struct RationalSource {
    std::mt19937_64 rng;
    explicit RationalSource(std::uint64_t seed) : rng(seed) {}

    Rational next(long bound = 20) {
        std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
        long a = 0;
        while (a == 0) a = num(rng);
        return Rational(a, den(rng));
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    // Pairwise distinct values.
    std::vector<Rational> distinct(std::size_t n, long bound = 20) {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational x = next(bound);
            bool fresh = true;
            for (const auto& y : out) fresh = fresh && !(x == y);
            if (fresh) out.push_back(x);
        }
        return out;
    }
};

struct ComplexSource {
    std::mt19937_64 rng;
    explicit ComplexSource(std::uint64_t seed) : rng(seed) {}

    Complex next(double lo = 0.5, double hi = 2.0) {
        std::uniform_real_distribution<double> r(lo, hi), a(-3.14159265358979, 3.14159265358979);
        return std::polar(r(rng), a(rng));
    }
    std::vector<Complex> vec(std::size_t n, double lo = 0.5, double hi = 2.0) {
        std::vector<Complex> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(next(lo, hi));
        return out;
    }
};

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const srcid::Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return srcid::from_int<T>(1);
    if (n == 1) return m(0, 0);
    T acc = srcid::from_int<T>(0);
    for (std::size_t j = 0; j < n; ++j) {
        srcid::Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const T term = m(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline bool near(const Complex& a, const Complex& b, double tol) { return srcid::relative_residual(a, b) <= tol; }

}  // namespace testing
