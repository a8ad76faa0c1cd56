#pragma once

#include <functional>
#include <vector>

#include "srcid/field.hpp"
#include "srcid/symmetrization.hpp"

namespace srcid {

inline constexpr int kMaxDecLength = 8;

// Disjoint subsets of [1..ell] ordered by strictly decreasing minima.
struct DecCollection {
    std::vector<std::vector<int>> parts;

    int total() const;
    bool singletons() const;
    // [1..ell] minus parts[0..i], i.e. the complement of the first i+1 parts.
    std::vector<int> tail_complement(int ell, std::size_t i) const;
};

std::vector<DecCollection> enumerate_dec(int ell, int k, bool singletons_only);

// #{(i, j) in a x b : i < j}; signed also subtracts #{i > j}.
long s_stat(const std::vector<int>& a, const std::vector<int>& b, bool signed_count);

enum class ChiSign { Plus, Minus };

// Plus: sum over K in [1..m], |K| = ell, of the v-side cross ratios.
// Minus: the u-side analogue over K in [1..n].
template <Scalar T>
T chi_genus_integral(ChiSign sign, int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v);

template <Scalar T>
struct WallPair {
    T lhs;
    T rhs;
};

// t^{l(l-1)/2} (+)-integral against the q-binomial expansion in (-)-integrals.
template <Scalar T>
WallPair<T> coeff_identity(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v);

using GammaWeight = std::function<long(int)>;

// gamma_d = 1 for d = 1, 0 otherwise.
long gamma_k(int d);

// (+) - (-) against the Dec(ell) sum with gamma weights over all collections.
template <Scalar T>
WallPair<T> wallcrossing_K(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v,
                           const GammaWeight& gamma = gamma_k);

// Same with the sum restricted to singleton collections.
template <Scalar T>
WallPair<T> wallcrossing_K_singletons(int ell, const T& t, const std::vector<T>& u, const std::vector<T>& v);

// Generating-series form of the identity in the (t, u, v) variables.
template <Scalar T>
WallPair<T> geometric_trig_identity(const T& t, const T& z, const std::vector<T>& u, const std::vector<T>& v);

// Rational (+) and (-) coefficients and the cohomological wall-crossing sum.
template <Scalar T>
T rational_chi_integral(ChiSign sign, int ell, const T& c, const std::vector<T>& u, const std::vector<T>& v);

template <Scalar T>
WallPair<T> wallcrossing_rational(int ell, const T& c, const std::vector<T>& u, const std::vector<T>& v);

// sum over chains ell >= h_1 > ... > h_k >= 1 of prod (ell - 2h_i - i + 2 + d)_t,
// against (d)_t! (ell)_t! / ((k)_t! (d-k)_t! (ell-k)_t!), t = s^2.
template <Scalar T>
WallPair<T> hook_product_identity(int ell, int k, int d, const T& s);

// t -> 1: sum (ell-k)!/ell! prod (s({h_i}, rest) + d) against C(d, k).
WallPair<Rational> hook_product_limit(int ell, int k, int d);

}  // namespace srcid
