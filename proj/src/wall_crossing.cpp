#include "srcid/wall_crossing.hpp"

#include <algorithm>

#include "srcid/source.hpp"

namespace srcid {

int DecCollection::total() const {
    int acc = 0;
    for (const auto& part : parts) acc += static_cast<int>(part.size());
    return acc;
}

bool DecCollection::singletons() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.size() == 1; });
}

std::vector<int> DecCollection::tail_complement(int ell, std::size_t i) const {
    std::vector<bool> used(static_cast<std::size_t>(ell) + 1, false);
    for (std::size_t k = 0; k <= i && k < parts.size(); ++k)
        for (int x : parts[k]) used[static_cast<std::size_t>(x)] = true;
    std::vector<int> rest;
    for (int x = 1; x <= ell; ++x)
        if (!used[static_cast<std::size_t>(x)]) rest.push_back(x);
    return rest;
}

namespace {

void dec_recurse(int ell, int remaining, int bound, unsigned used, bool singletons_only, DecCollection& current,
                 std::vector<DecCollection>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int a = bound - 1; a >= 1; --a) {
        if (used & (1u << a)) continue;
        std::vector<int> larger;
        for (int x = a + 1; x <= ell; ++x)
            if (!(used & (1u << x))) larger.push_back(x);
        const unsigned limit = singletons_only ? 1u : (1u << larger.size());
        for (unsigned mask = 0; mask < limit; ++mask) {
            std::vector<int> part{a};
            unsigned part_bits = 1u << a;
            for (std::size_t b = 0; b < larger.size(); ++b) {
                if (mask & (1u << b)) {
                    part.push_back(larger[b]);
                    part_bits |= 1u << larger[b];
                }
            }
            if (static_cast<int>(part.size()) > remaining) continue;
            current.parts.push_back(part);
            dec_recurse(ell, remaining - static_cast<int>(part.size()), a, used | part_bits, singletons_only, current,
                        out);
            current.parts.pop_back();
        }
    }
}

}  // namespace

std::vector<DecCollection> enumerate_dec(int ell, int k, bool singletons_only) {
    if (ell < 0 || k < 0 || k > ell) throw DomainError("enumerate_dec needs 0 <= k <= ell");
    if (ell > kMaxDecLength) throw SizeError("enumerate_dec limited to ell <= 8");
    std::vector<DecCollection> out;
    DecCollection current;
    dec_recurse(ell, k, ell + 1, 0u, singletons_only, current, out);
    return out;
}

long s_stat(const std::vector<int>& a, const std::vector<int>& b, bool signed_count) {
    long less = 0, greater = 0;
    for (int i : a) {
        for (int j : b) {
            if (i == j) throw DomainError("s-statistic needs disjoint sets");
            if (i < j) ++less;
            else ++greater;
        }
    }
    return signed_count ? less - greater : less;
}

long gamma_k(int d) { return d == 1 ? 1 : 0; }

template <Scalar T>
T chi_genus_integral(ChiSign sign, int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v) {
    const T one = from_int<T>(1);
    const bool plus = sign == ChiSign::Plus;
    const auto& x = plus ? v : u;
    const std::size_t size = x.size();
    if (ell < 0) throw DomainError("negative rank");
    if (static_cast<std::size_t>(ell) > size) return from_int<T>(0);
    SubsetTerms<T> terms;
    terms.size = size;
    terms.weight.assign(size + 1, one);
    terms.pair.assign(size * size, one);
    terms.inside.assign(size, one);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j) continue;
            const T ratio = plus ? x[i] / x[j] : x[j] / x[i];
            terms.pair[i * size + j] = checked_div(one - t * ratio, one - ratio);
        }
        for (const T& y : plus ? u : v) {
            const T ratio = plus ? y / x[i] : x[i] / y;
            terms.inside[i] *= checked_div(one - t * ratio, one - ratio);
        }
    }
    return subset_sum_fixed(terms, static_cast<std::size_t>(ell));
}

namespace {

long tri(long a) { return a * (a - 1) / 2; }

template <Scalar T>
void require_n_le_m(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() > v.size()) throw DomainError("wall-crossing formulas need n <= m");
}

}  // namespace

template <Scalar T>
WallPair<T> coeff_identity(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v) {
    require_n_le_m(u, v);
    const long n = static_cast<long>(u.size()), m = static_cast<long>(v.size());
    const T lhs = ipow(t, tri(ell)) * chi_genus_integral(ChiSign::Plus, ell, t, u, v);
    T rhs = from_int<T>(0);
    for (long k = 0; k <= ell && k <= m - n; ++k) {
        rhs += ipow(t, n * k + tri(k)) * q_binomial(m - n, k, t) * ipow(t, tri(ell - k)) *
               chi_genus_integral(ChiSign::Minus, ell - static_cast<int>(k), t, u, v);
    }
    return {lhs, rhs};
}

template <Scalar T>
WallPair<T> wallcrossing_K(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v,
                           const GammaWeight& gamma) {
    require_n_le_m(u, v);
    const long n = static_cast<long>(u.size()), m = static_cast<long>(v.size());
    const T one = from_int<T>(1);
    const T lhs = chi_genus_integral(ChiSign::Plus, ell, t, u, v) - chi_genus_integral(ChiSign::Minus, ell, t, u, v);
    T rhs = from_int<T>(0);
    for (int k = 1; k <= ell; ++k) {
        const T outer = checked_div(q_factorial(ell - k, t), q_factorial(ell, t)) *
                        chi_genus_integral(ChiSign::Minus, ell - k, t, u, v);
        for (const auto& dec : enumerate_dec(ell, k, false)) {
            T term = outer;
            for (std::size_t i = 0; i < dec.parts.size(); ++i) {
                const auto& part = dec.parts[i];
                const long d = static_cast<long>(part.size());
                const long g = gamma(static_cast<int>(d));
                if (g == 0) {
                    term = from_int<T>(0);
                    break;
                }
                const auto rest = dec.tail_complement(ell, i);
                const long idx = static_cast<long>(i) + 1;
                term *= checked_div(q_factorial(d - 1, t), t - one) * from_int<T>(g) * ipow(t, -(ell - idx) * d) *
                        (ipow(t, s_stat(part, rest, false) + m * d) - ipow(t, s_stat(rest, part, false) + n * d));
            }
            rhs += term;
        }
    }
    return {lhs, rhs};
}

template <Scalar T>
WallPair<T> wallcrossing_K_singletons(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v) {
    require_n_le_m(u, v);
    const long n = static_cast<long>(u.size()), m = static_cast<long>(v.size());
    const T one = from_int<T>(1);
    const T lhs = chi_genus_integral(ChiSign::Plus, ell, t, u, v) - chi_genus_integral(ChiSign::Minus, ell, t, u, v);
    T rhs = from_int<T>(0);
    for (int k = 1; k <= ell; ++k) {
        const T outer = checked_div(q_factorial(ell - k, t), q_factorial(ell, t)) *
                        chi_genus_integral(ChiSign::Minus, ell - k, t, u, v);
        for (const auto& dec : enumerate_dec(ell, k, true)) {
            T term = outer;
            for (std::size_t i = 0; i < dec.parts.size(); ++i) {
                const auto rest = dec.tail_complement(ell, i);
                const long idx = static_cast<long>(i) + 1;
                term *= checked_div(ipow(t, s_stat(dec.parts[i], rest, false) + m) -
                                        ipow(t, s_stat(rest, dec.parts[i], false) + n),
                                    t - one) *
                        ipow(t, idx - ell);
            }
            rhs += term;
        }
    }
    return {lhs, rhs};
}

template <Scalar T>
WallPair<T> geometric_trig_identity(const T& t, const T& z, const std::vector<T>& u, const std::vector<T>& v) {
    require_n_le_m(u, v);
    const long n = static_cast<long>(u.size()), m = static_cast<long>(v.size());
    const T one = from_int<T>(1);
    T lhs = from_int<T>(0), rhs = from_int<T>(0);
    for (long l = 0; l <= m; ++l)
        lhs += ipow(-z, l) * ipow(t, tri(l)) * chi_genus_integral(ChiSign::Plus, static_cast<int>(l), t, u, v);
    for (long l = 0; l <= n; ++l)
        rhs += ipow(-z, l) * ipow(t, tri(l)) * chi_genus_integral(ChiSign::Minus, static_cast<int>(l), t, u, v);
    T pre = one;
    for (long j = 1; j <= m - n; ++j) pre *= one - ipow(t, m - j) * z;
    return {lhs, pre * rhs};
}

template <Scalar T>
T rational_chi_integral(ChiSign sign, int ell, const T& c, const std::vector<T>& u, const std::vector<T>& v) {
    const T one = from_int<T>(1);
    const bool plus = sign == ChiSign::Plus;
    const auto& x = plus ? v : u;
    const std::size_t size = x.size();
    if (ell < 0) throw DomainError("negative rank");
    if (static_cast<std::size_t>(ell) > size) return from_int<T>(0);
    const T shift = plus ? -c : c;
    SubsetTerms<T> terms;
    terms.size = size;
    terms.weight.assign(size + 1, one);
    terms.pair.assign(size * size, one);
    terms.inside.assign(size, one);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i != j) terms.pair[i * size + j] = checked_div(x[i] - x[j] + shift, x[i] - x[j]);
        }
        for (const T& y : plus ? u : v) terms.inside[i] *= checked_div(x[i] - y, x[i] - y + shift);
    }
    return subset_sum_fixed(terms, static_cast<std::size_t>(ell));
}

template <Scalar T>
WallPair<T> wallcrossing_rational(int ell, const T& c, const std::vector<T>& u, const std::vector<T>& v) {
    require_n_le_m(u, v);
    const long d = static_cast<long>(v.size()) - static_cast<long>(u.size());
    const T lhs =
        rational_chi_integral(ChiSign::Plus, ell, c, u, v) - rational_chi_integral(ChiSign::Minus, ell, c, u, v);
    T rhs = from_int<T>(0);
    for (int k = 1; k <= ell; ++k) {
        T weight = from_int<T>(0);
        for (const auto& dec : enumerate_dec(ell, k, true)) {
            long prod = 1;
            for (std::size_t i = 0; i < dec.parts.size(); ++i)
                prod *= s_stat(dec.parts[i], dec.tail_complement(ell, i), true) + d;
            weight += from_int<T>(prod);
        }
        weight = weight * from_ratio<T>(factorial(ell - k), factorial(ell));
        rhs += weight * rational_chi_integral(ChiSign::Minus, ell - k, c, u, v);
    }
    return {lhs, rhs};
}

template <Scalar T>
WallPair<T> hook_product_identity(int ell, int k, int d, const T& s) {
    if (k < 0 || k > ell) throw DomainError("hook identity needs 0 <= k <= ell");
    if (d < k) throw DomainError("hook identity needs d >= k");
    T lhs = from_int<T>(0);
    for (const auto& dec : enumerate_dec(ell, k, true)) {
        T term = from_int<T>(1);
        for (std::size_t i = 0; i < dec.parts.size(); ++i) {
            const long h = dec.parts[i][0];
            const long idx = static_cast<long>(i) + 1;
            term *= sym_q_number(ell - 2 * h - idx + 2 + d, s);
        }
        lhs += term;
    }
    const T rhs = checked_div(sym_q_factorial(d, s) * sym_q_factorial(ell, s),
                              sym_q_factorial(k, s) * sym_q_factorial(d - k, s) * sym_q_factorial(ell - k, s));
    return {lhs, rhs};
}

WallPair<Rational> hook_product_limit(int ell, int k, int d) {
    if (k < 0 || k > ell) throw DomainError("hook identity needs 0 <= k <= ell");
    if (d < k) throw DomainError("hook identity needs d >= k");
    Rational lhs(0);
    for (const auto& dec : enumerate_dec(ell, k, true)) {
        long prod = 1;
        for (std::size_t i = 0; i < dec.parts.size(); ++i)
            prod *= s_stat(dec.parts[i], dec.tail_complement(ell, i), true) + d;
        lhs += Rational(prod);
    }
    lhs *= Rational(factorial(ell - k), factorial(ell));
    return {lhs, Rational(binomial(d, k))};
}

#define SRCID_INSTANTIATE(T)                                                                                    \
    template T chi_genus_integral<T>(ChiSign, int, const T&, const std::vector<T>&, const std::vector<T>&);    \
    template WallPair<T> coeff_identity<T>(int, const T&, const std::vector<T>&, const std::vector<T>&);       \
    template WallPair<T> wallcrossing_K<T>(int, const T&, const std::vector<T>&, const std::vector<T>&,        \
                                           const GammaWeight&);                                                 \
    template WallPair<T> wallcrossing_K_singletons<T>(int, const T&, const std::vector<T>&,                    \
                                                      const std::vector<T>&);                                  \
    template WallPair<T> geometric_trig_identity<T>(const T&, const T&, const std::vector<T>&,                 \
                                                    const std::vector<T>&);                                    \
    template T rational_chi_integral<T>(ChiSign, int, const T&, const std::vector<T>&, const std::vector<T>&); \
    template WallPair<T> wallcrossing_rational<T>(int, const T&, const std::vector<T>&, const std::vector<T>&); \
    template WallPair<T> hook_product_identity<T>(int, int, int, const T&);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

}  // namespace srcid
