#include <cmath>
#include <numbers>

#include "srcid/engine.hpp"
#include "srcid/matrix.hpp"
#include "srcid/scalar.hpp"

namespace srcid {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t point_seed(std::uint64_t master, const std::string& case_id, int index, int n, int m, int k) {
    std::uint64_t h = splitmix64(master ^ fnv1a(case_id));
    for (int x : {index, n, m, k}) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
    return h;
}

template <Scalar T>
Sampler<T>::Sampler(std::uint64_t seed, double tol_singular) : rng_(seed), tol_(tol_singular) {}

template <Scalar T>
long Sampler<T>::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

template <Scalar T>
double Sampler<T>::real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

template <Scalar T>
T Sampler<T>::small_rational(int bound) {
    long num = 0;
    while (num == 0) num = integer(-bound, bound);
    const long den = integer(1, bound);
    return from_ratio<T>(num, den);
}

template <Scalar T>
T Sampler<T>::rational_in(int lo, int hi) {
    const long den = integer(1, 10);
    return from_ratio<T>(integer(lo * den, hi * den), den);
}

template <Scalar T>
T Sampler<T>::generic() {
    if constexpr (is_exact_v<T>) {
        return small_rational(20);
    } else {
        const double r = real(0.2, 3.0);
        const double a = real(0.0, 2.0 * std::numbers::pi);
        return std::polar(r, a);
    }
}

template <Scalar T>
T Sampler<T>::base() {
    if constexpr (is_exact_v<T>) {
        for (;;) {
            T q = small_rational(20);
            if (q != from_int<T>(1) && q != from_int<T>(-1)) return q;
        }
    } else {
        const bool inside = integer(0, 1) == 0;
        const double r = inside ? real(0.2, 0.8) : real(1.25, 5.0);
        return std::polar(r, real(0.0, 2.0 * std::numbers::pi));
    }
}

template <Scalar T>
T Sampler<T>::nome() {
    if constexpr (is_exact_v<T>) {
        throw DomainError("elliptic nome needs the complex field");
    } else {
        return std::polar(real(0.05, 0.5), real(0.0, 2.0 * std::numbers::pi));
    }
}

template <Scalar T>
std::vector<T> Sampler<T>::generic_vector(std::size_t k) {
    std::vector<T> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(generic());
    return out;
}

template <Scalar T>
void Sampler<T>::protect(const T& x) const {
    if (is_zero(x) || (!is_exact_v<T> && magnitude(x) < tol_)) throw SingularError("draw too close to a pole");
}

template <Scalar T>
void protect_trig(Sampler<T>& s, const TrigParams<T>& p) {
    const auto& u = p.u;
    const auto& v = p.v;
    const T one = from_int<T>(1);
    s.protect(p.q);
    s.protect(p.z);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) s.protect(v[i] - v[j]);
        for (const T& x : u) s.protect(v[i] - p.q * x);
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) s.protect(u[i] - u[j]);
    // (z;q)_{m-n} with m < n has reciprocal factors 1 - q^{-j} z.
    for (long j = 1; j <= static_cast<long>(u.size()) - static_cast<long>(v.size()); ++j)
        s.protect(one - ipow(p.q, -j) * p.z);
}

template <Scalar T>
void protect_rational(Sampler<T>& s, const RationalParams<T>& p) {
    const auto& u = p.u;
    const auto& v = p.v;
    s.protect(p.c);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) s.protect(v[i] - v[j]);
        for (const T& x : u) s.protect(v[i] - x - p.c);
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) s.protect(u[i] - u[j]);
    if (u.size() > v.size()) s.protect(from_int<T>(1) - p.z);
}

void protect_elliptic(Sampler<Complex>& s, const EllipticParams<Complex>& p) {
    auto th = [&](const Complex& x) { return theta(x, p.p); };
    const std::size_t n = p.u.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                s.protect(th(p.v[j] / p.v[i]));
                s.protect(th(p.u[i] / p.u[j]));
            }
            s.protect(th(p.q * p.u[j] / p.v[i]));
        }
    }
}

template <Scalar T>
TrigParams<T> sample_trig(Sampler<T>& s, std::size_t n, std::size_t m, bool with_lambda) {
    TrigParams<T> p;
    p.q = s.base();
    p.z = s.generic();
    p.u = s.generic_vector(n);
    p.v = s.generic_vector(m);
    if (with_lambda) p.lambda = s.generic();
    protect_trig(s, p);
    return p;
}

template <Scalar T>
RationalParams<T> sample_rational(Sampler<T>& s, std::size_t n, std::size_t m) {
    RationalParams<T> p;
    p.c = s.generic();
    p.z = s.generic();
    p.u = s.generic_vector(n);
    p.v = s.generic_vector(m);
    protect_rational(s, p);
    return p;
}

EllipticParams<Complex> sample_elliptic(Sampler<Complex>& s, std::size_t n) {
    EllipticParams<Complex> p;
    p.p = s.nome();
    p.q = s.base();
    p.lambda = s.generic();
    p.z = s.generic();
    p.u = s.generic_vector(n);
    p.v = s.generic_vector(n);
    protect_elliptic(s, p);
    return p;
}

namespace {

template <Scalar T>
Matrix<T> invertible_integer_matrix(Sampler<T>& s, std::size_t size) {
    for (;;) {
        Matrix<T> a(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) a(i, j) = from_int<T>(s.integer(-5, 5));
        if (size == 0) return a;
        // integer determinant: anything below 1/2 in floating point is a zero
        if constexpr (is_exact_v<T>) {
            if (!is_zero(det(a))) return a;
        } else {
            if (std::abs(det(a)) >= 0.5) return a;
        }
    }
}

template <Scalar T>
std::vector<T> distinct_rationals(Sampler<T>& s, std::size_t size) {
    std::vector<T> out;
    while (out.size() < size) {
        T x = s.small_rational(9);
        bool fresh = true;
        for (const T& y : out) fresh = fresh && !(x == y);
        if (fresh) out.push_back(x);
    }
    return out;
}

}  // namespace

template <Scalar T>
AuxParams<T> sample_aux(Sampler<T>& s, std::size_t n, std::size_t m) {
    AuxParams<T> a;
    a.r = s.small_rational(5);
    a.p_mix = invertible_integer_matrix(s, m);
    a.q_mix = invertible_integer_matrix(s, n);
    a.delta = s.rational_in(2, 10);
    a.eta_v = distinct_rationals(s, m);
    a.eta_u = distinct_rationals(s, n);
    return a;
}

#define SRCID_INSTANTIATE(T)                                                                  \
    template class Sampler<T>;                                                                \
    template void protect_trig<T>(Sampler<T>&, const TrigParams<T>&);                         \
    template void protect_rational<T>(Sampler<T>&, const RationalParams<T>&);                 \
    template TrigParams<T> sample_trig<T>(Sampler<T>&, std::size_t, std::size_t, bool);       \
    template RationalParams<T> sample_rational<T>(Sampler<T>&, std::size_t, std::size_t);     \
    template AuxParams<T> sample_aux<T>(Sampler<T>&, std::size_t, std::size_t);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(Rational)

}  // namespace srcid
