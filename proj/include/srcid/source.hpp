#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "srcid/params.hpp"
#include "srcid/scalar.hpp"

namespace srcid {

inline constexpr std::size_t kMaxSubsetSize = 12;

// Generic weighted subset sum over K in [0, size):
//   sum_K weight[|K|] * prod_{i in K, j not in K} pair(i, j)
//                     * prod_{i in K} inside[i] * prod_{j not in K} outside[j]
// Empty `outside` means all ones.
template <Scalar T>
struct SubsetTerms {
    std::size_t size = 0;
    std::vector<T> weight;
    std::vector<T> pair;  // row-major size x size
    std::vector<T> inside;
    std::vector<T> outside;
};

template <Scalar T>
T subset_sum(const SubsetTerms<T>& terms);

// Same sum restricted to |K| = ell.
template <Scalar T>
T subset_sum_fixed(const SubsetTerms<T>& terms, std::size_t ell);

// F, G (rational functions) and P, Q (cleared polynomial versions).
template <Scalar T>
T elliptic_source(const EllipticParams<T>& params, Side side, const Truncation& trunc = {});

template <Scalar T>
T trig_source(const TrigParams<T>& params, Side side);

// Lambda-weighted trigonometric sums, weight (1 - q^{|K|} lambda):
//   F: F_{n,m}^{trig(z)}(u|v|lambda) over K in [1..m]
//   G: sum over K in [1..n] with (qu_i - u_j)/(u_i - u_j) and
//      (v_k - u_i)/(v_k - q u_i) factors, no (z;q) prefactor.
template <Scalar T>
T trig_lambda_source(const TrigParams<T>& params, Side side);

template <Scalar T>
T rational_source(const RationalParams<T>& params, Side side);

// Sum of |term| over all subsets times |prefactor|; the natural size of the
// cancellation when checking a sum against zero in floating point.
template <Scalar T>
double elliptic_source_scale(const EllipticParams<T>& params, Side side, const Truncation& trunc = {});

template <Scalar T>
double trig_source_scale(const TrigParams<T>& params, Side side);

template <Scalar T>
double rational_source_scale(const RationalParams<T>& params, Side side);

enum class ShiftKind { Multiplicative, Additive };
enum class ShiftDirection { Forward, Inverse };

// x -> x*step (Forward) or x/step (Inverse) for multiplicative shifts,
// x -> x+step or x-step for additive ones.
template <Scalar T>
struct Shift {
    ShiftKind kind;
    T step;
    ShiftDirection direction;

    T apply(const T& x) const;
};

template <Scalar T>
using PointFunction = std::function<T(const std::vector<T>&)>;

// prod_{j in vars} (1 - z T_j) f, evaluated at `point`.
template <Scalar T>
T apply_difference_product(const PointFunction<T>& f, const std::vector<std::size_t>& vars, const Shift<T>& shift,
                           const T& z, const std::vector<T>& point);

// F or G through the difference-operator expansions.
template <Scalar T>
T elliptic_source_via_difference_ops(const EllipticParams<T>& params, Side side, const Truncation& trunc = {});

template <Scalar T>
T trig_source_via_difference_ops(const TrigParams<T>& params, Side side);

template <Scalar T>
T rational_source_via_difference_ops(const RationalParams<T>& params, Side side);

}  // namespace srcid
