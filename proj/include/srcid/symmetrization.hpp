#pragma once

#include <functional>
#include <vector>

#include "srcid/field.hpp"
#include "srcid/matrix.hpp"

namespace srcid {

inline constexpr std::size_t kMaxPolyDegree = 12;
inline constexpr std::size_t kMaxSymSize = 8;

template <Scalar T>
class UniPoly {
public:
    UniPoly() = default;
    // coeffs[k] multiplies x^k; trailing zeros are trimmed.
    explicit UniPoly(std::vector<T> coeffs);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T leading() const;
    T operator()(const T& x) const;

private:
    std::vector<T> coeffs_;
};

template <Scalar T>
using MultiFunction = std::function<T(const std::vector<T>&)>;

template <Scalar T>
using UniFunction = std::function<T(const T&)>;

// (f(.., u_k, u_{k+1}, ..) - f(.., u_{k+1}, u_k, ..)) / (u_k - u_{k+1}), k is 1-based.
template <Scalar T>
T divided_difference(const MultiFunction<T>& f, const std::vector<T>& u, std::size_t k);

// d_{n-1} ... d_1 f(u_1) through the Newton table.
template <Scalar T>
T newton_chain(const UniFunction<T>& f, const std::vector<T>& u);

template <Scalar T>
T newton_chain(const UniPoly<T>& f, const std::vector<T>& u);

// Same quantity by literal nested application of divided_difference (2^{n-1} calls).
template <Scalar T>
T operator_chain(const UniFunction<T>& f, const std::vector<T>& u);

// prod_{i<j} (u_{k_i} - u_{k_j} - c) / (u_{k_i} - u_{k_j}), k 0-based.
template <Scalar T>
T delta_factor(const std::vector<T>& u, const std::vector<std::size_t>& k, const T& c);

// sum_{w in S_n} w . (Delta(1..n) g(u_1..u_n)).
template <Scalar T>
T sym_c(const MultiFunction<T>& g, const std::vector<T>& u, const T& c);

// g composed with theta^s: u_k -> u_{k+s}, u_{k+n} = u_k + c.
template <Scalar T>
MultiFunction<T> theta_shift(MultiFunction<T> g, std::size_t s, T c);

template <Scalar T>
struct SymPair {
    T lhs;
    T rhs;
};

// Sym_c((1 - theta)^{n-1} prod_{j>=2,k} (u_j - v_k) f(u_1)) against the
// determinant side with the (n-1)! (-c)^{n-1} factor.
template <Scalar T>
SymPair<T> lascoux_theorem3(const std::vector<T>& u, const std::vector<T>& v, const T& c, const UniFunction<T>& f);

// Same left side against (n-1)!/(-c) P_{n,n}^{z=1} d_{n-1}...d_1 f(u_1), c != 0.
template <Scalar T>
SymPair<T> lascoux_theorem3_via_source(const std::vector<T>& u, const std::vector<T>& v, const T& c,
                                       const UniFunction<T>& f);

// Coefficient-of-f(u_1) form of lascoux_theorem3.
template <Scalar T>
SymPair<T> lascoux_reduction(const std::vector<T>& u, const std::vector<T>& v, const T& c);

// Sym_c((1 - tau)^n prod_{j,k} (u_j - v_k - c)/(u_j - v_k)) against its determinant form.
template <Scalar T>
SymPair<T> lascoux_theorem4(const std::vector<T>& u, const std::vector<T>& v, const T& c);

// Same left side against n!/prod(u_j - v_k) P_{n,n}^{z=1}(u | v + c).
template <Scalar T>
SymPair<T> lascoux_theorem4_via_source(const std::vector<T>& u, const std::vector<T>& v, const T& c);

}  // namespace srcid
