#include "srcid/source.hpp"

#include <bit>
#include <cstdint>

namespace srcid {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxSubsetSize) throw SizeError("subset sums are capped at 12 variables");
}

template <Scalar T>
T subset_term(const SubsetTerms<T>& t, std::uint32_t mask) {
    const std::size_t n = t.size;
    T term = t.weight[static_cast<std::size_t>(std::popcount(mask))];
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
            term *= t.inside[i];
            for (std::size_t j = 0; j < n; ++j)
                if (!(mask & (1u << j))) term *= t.pair[i * n + j];
        } else if (!t.outside.empty()) {
            term *= t.outside[i];
        }
    }
    return term;
}

// (-a)^s * q^{s(s-1)/2} * extra(s) for s = 0..n
template <Scalar T, class Extra>
std::vector<T> kajihara_weights(std::size_t n, const T& a, const T& q, Extra extra) {
    std::vector<T> w;
    w.reserve(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        const long sl = static_cast<long>(s);
        w.push_back(ipow(-a, sl) * ipow(q, sl * (sl - 1) / 2) * extra(sl));
    }
    return w;
}

template <Scalar T>
std::vector<T> plain_weights(std::size_t n, const T& a) {
    std::vector<T> w;
    for (std::size_t s = 0; s <= n; ++s) w.push_back(ipow(-a, static_cast<long>(s)));
    return w;
}

template <Scalar T>
T vandermonde_desc(const std::vector<T>& x) {  // prod_{i<j} (x_j - x_i)
    T acc = from_int<T>(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) acc *= x[j] - x[i];
    return acc;
}

}  // namespace

template <Scalar T>
T subset_sum(const SubsetTerms<T>& t) {
    check_size(t.size);
    T acc = from_int<T>(0);
    const std::uint32_t end = 1u << t.size;
    for (std::uint32_t mask = 0; mask < end; ++mask) acc += subset_term(t, mask);
    return acc;
}

template <Scalar T>
T subset_sum_fixed(const SubsetTerms<T>& t, std::size_t ell) {
    check_size(t.size);
    T acc = from_int<T>(0);
    const std::uint32_t end = 1u << t.size;
    for (std::uint32_t mask = 0; mask < end; ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == ell) acc += subset_term(t, mask);
    return acc;
}

namespace {

template <Scalar T>
T elliptic_terms(const EllipticParams<T>& e, Side side, const Truncation& trunc, SubsetTerms<T>& t) {
    const std::size_t n = e.u.size();
    if (e.v.size() != n) throw DomainError("elliptic source functions need |u| = |v|");
    check_size(n);
    auto th = [&](const T& x) { return theta(x, e.p, trunc); };
    const T ratio = e.lambda * product(e.u) / product(e.v);

    t.size = n;
    t.weight = kajihara_weights(n, e.z, e.q, [&](long s) { return th(ipow(e.q, s) * ratio); });
    t.pair.resize(n * n, from_int<T>(1));
    t.inside.resize(n, from_int<T>(1));
    const bool v_side = side == Side::F || side == Side::P;
    const bool cleared = side == Side::P || side == Side::Q;
    if (cleared) t.outside.resize(n, from_int<T>(1));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            t.pair[i * n + j] = v_side ? checked_div(th(e.q * e.v[j] / e.v[i]), th(e.v[j] / e.v[i]))
                                       : checked_div(th(e.q * e.u[i] / e.u[j]), th(e.u[i] / e.u[j]));
        }
        for (std::size_t k = 0; k < n; ++k) {
            const T num = v_side ? th(e.u[k] / e.v[i]) : th(e.u[i] / e.v[k]);
            const T den = v_side ? th(e.q * e.u[k] / e.v[i]) : th(e.q * e.u[i] / e.v[k]);
            if (cleared) {
                t.inside[i] *= num;
                t.outside[i] *= den;
            } else {
                t.inside[i] *= checked_div(num, den);
            }
        }
    }
    return from_int<T>(1);
}

template <Scalar T>
T trig_terms(const TrigParams<T>& tp, Side side, SubsetTerms<T>& t) {
    const std::size_t n = tp.u.size();
    const std::size_t m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& q = tp.q;
    const bool cleared = side == Side::P || side == Side::Q;
    auto one = [] { return from_int<T>(1); };

    if (side == Side::F || side == Side::P) {
        check_size(m);
        t.size = m;
        t.weight = kajihara_weights(m, tp.z, q, [&](long) { return one(); });
        t.pair.resize(m * m, one());
        t.inside.resize(m, one());
        if (cleared) t.outside.resize(m, one());
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) t.pair[i * m + j] = checked_div(tp.v[i] - q * tp.v[j], tp.v[i] - tp.v[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (cleared) {
                    t.inside[i] *= tp.v[i] - tp.u[k];
                    t.outside[i] *= tp.v[i] - q * tp.u[k];
                } else {
                    t.inside[i] *= checked_div(tp.v[i] - tp.u[k], tp.v[i] - q * tp.u[k]);
                }
            }
        }
        return one();
    }

    check_size(n);
    t.size = n;
    t.weight = kajihara_weights(n, ipow(q, d) * tp.z, q, [&](long) { return one(); });
    t.pair.resize(n * n, one());
    t.inside.resize(n, one());
    if (cleared) t.outside.resize(n, one());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) t.pair[i * n + j] = checked_div(q * tp.u[i] - tp.u[j], tp.u[i] - tp.u[j]);
        for (std::size_t k = 0; k < m; ++k) {
            if (cleared) {
                t.inside[i] *= tp.v[k] - tp.u[i];
                t.outside[i] *= tp.v[k] - q * tp.u[i];
            } else {
                t.inside[i] *= checked_div(tp.v[k] - tp.u[i], tp.v[k] - q * tp.u[i]);
            }
        }
    }
    return qpoch_n(tp.z, q, d);
}

}  // namespace

template <Scalar T>
T trig_lambda_source(const TrigParams<T>& tp, Side side) {
    if (!tp.lambda) throw DomainError("trig_lambda_source needs lambda");
    const std::size_t n = tp.u.size();
    const std::size_t m = tp.v.size();
    const T& q = tp.q;
    const T lam = *tp.lambda;
    auto one = [] { return from_int<T>(1); };
    auto lambda_weight = [&](long s) { return one() - ipow(q, s) * lam; };

    SubsetTerms<T> t;
    if (side == Side::F) {
        check_size(m);
        t.size = m;
        t.weight = kajihara_weights(m, tp.z, q, lambda_weight);
        t.pair.resize(m * m, one());
        t.inside.resize(m, one());
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) t.pair[i * m + j] = checked_div(tp.v[i] - q * tp.v[j], tp.v[i] - tp.v[j]);
            for (std::size_t k = 0; k < n; ++k) t.inside[i] *= checked_div(tp.v[i] - tp.u[k], tp.v[i] - q * tp.u[k]);
        }
        return subset_sum(t);
    }
    if (side != Side::G) throw DomainError("trig_lambda_source supports sides F and G");
    check_size(n);
    t.size = n;
    t.weight = kajihara_weights(n, tp.z, q, lambda_weight);
    t.pair.resize(n * n, one());
    t.inside.resize(n, one());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) t.pair[i * n + j] = checked_div(q * tp.u[i] - tp.u[j], tp.u[i] - tp.u[j]);
        for (std::size_t k = 0; k < m; ++k) t.inside[i] *= checked_div(tp.v[k] - tp.u[i], tp.v[k] - q * tp.u[i]);
    }
    return subset_sum(t);
}

namespace {

template <Scalar T>
T rational_terms(const RationalParams<T>& rp, Side side, SubsetTerms<T>& t) {
    const std::size_t n = rp.u.size();
    const std::size_t m = rp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& c = rp.c;
    const bool cleared = side == Side::P || side == Side::Q;
    auto one = [] { return from_int<T>(1); };

    if (side == Side::F || side == Side::P) {
        check_size(m);
        t.size = m;
        t.weight = plain_weights(m, rp.z);
        t.pair.resize(m * m, one());
        t.inside.resize(m, one());
        if (cleared) t.outside.resize(m, one());
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) t.pair[i * m + j] = checked_div(rp.v[i] - rp.v[j] - c, rp.v[i] - rp.v[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (cleared) {
                    t.inside[i] *= rp.v[i] - rp.u[k];
                    t.outside[i] *= rp.v[i] - rp.u[k] - c;
                } else {
                    t.inside[i] *= checked_div(rp.v[i] - rp.u[k], rp.v[i] - rp.u[k] - c);
                }
            }
        }
        return one();
    }

    check_size(n);
    t.size = n;
    t.weight = plain_weights(n, rp.z);
    t.pair.resize(n * n, one());
    t.inside.resize(n, one());
    if (cleared) t.outside.resize(n, one());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) t.pair[i * n + j] = checked_div(rp.u[i] - rp.u[j] + c, rp.u[i] - rp.u[j]);
        for (std::size_t k = 0; k < m; ++k) {
            if (cleared) {
                t.inside[i] *= rp.v[k] - rp.u[i];
                t.outside[i] *= rp.v[k] - rp.u[i] - c;
            } else {
                t.inside[i] *= checked_div(rp.u[i] - rp.v[k], rp.u[i] - rp.v[k] + c);
            }
        }
    }
    return ipow(one() - rp.z, d);
}

template <Scalar T>
double abs_sum(const SubsetTerms<T>& t) {
    check_size(t.size);
    double acc = 0.0;
    const std::uint32_t end = 1u << t.size;
    for (std::uint32_t mask = 0; mask < end; ++mask) acc += magnitude(subset_term(t, mask));
    return acc;
}

}  // namespace

template <Scalar T>
T elliptic_source(const EllipticParams<T>& e, Side side, const Truncation& trunc) {
    SubsetTerms<T> t;
    const T pre = elliptic_terms(e, side, trunc, t);
    return pre * subset_sum(t);
}

template <Scalar T>
T trig_source(const TrigParams<T>& tp, Side side) {
    SubsetTerms<T> t;
    const T pre = trig_terms(tp, side, t);
    return pre * subset_sum(t);
}

template <Scalar T>
T rational_source(const RationalParams<T>& rp, Side side) {
    SubsetTerms<T> t;
    const T pre = rational_terms(rp, side, t);
    return pre * subset_sum(t);
}

template <Scalar T>
double elliptic_source_scale(const EllipticParams<T>& e, Side side, const Truncation& trunc) {
    SubsetTerms<T> t;
    const T pre = elliptic_terms(e, side, trunc, t);
    return magnitude(pre) * abs_sum(t);
}

template <Scalar T>
double trig_source_scale(const TrigParams<T>& tp, Side side) {
    SubsetTerms<T> t;
    const T pre = trig_terms(tp, side, t);
    return magnitude(pre) * abs_sum(t);
}

template <Scalar T>
double rational_source_scale(const RationalParams<T>& rp, Side side) {
    SubsetTerms<T> t;
    const T pre = rational_terms(rp, side, t);
    return magnitude(pre) * abs_sum(t);
}

template <Scalar T>
T Shift<T>::apply(const T& x) const {
    const bool fwd = direction == ShiftDirection::Forward;
    if (kind == ShiftKind::Multiplicative) return fwd ? x * step : checked_div(x, step);
    return fwd ? x + step : x - step;
}

template <Scalar T>
T apply_difference_product(const PointFunction<T>& f, const std::vector<std::size_t>& vars, const Shift<T>& shift,
                           const T& z, const std::vector<T>& point) {
    check_size(vars.size());
    T acc = from_int<T>(0);
    const std::uint32_t end = 1u << vars.size();
    std::vector<T> shifted;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        shifted = point;
        for (std::size_t b = 0; b < vars.size(); ++b)
            if (mask & (1u << b)) shifted[vars[b]] = shift.apply(point[vars[b]]);
        acc += ipow(-z, std::popcount(mask)) * f(shifted);
    }
    return acc;
}

namespace {

// Splits a packed point [u..., v...] back into its two blocks.
template <Scalar T>
void unpack(const std::vector<T>& point, std::size_t n, std::vector<T>& u, std::vector<T>& v) {
    u.assign(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(n));
    v.assign(point.begin() + static_cast<std::ptrdiff_t>(n), point.end());
}

template <Scalar T>
std::vector<T> pack(const std::vector<T>& u, const std::vector<T>& v) {
    std::vector<T> point = u;
    point.insert(point.end(), v.begin(), v.end());
    return point;
}

std::vector<std::size_t> index_range(std::size_t from, std::size_t count) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = from + i;
    return idx;
}

// prod_{i<j}(x_j - x_i) / prod_{i,k}(x_i - y_k)
template <Scalar T>
T cauchy_ratio(const std::vector<T>& x, const std::vector<T>& y) {
    T den = from_int<T>(1);
    for (const T& a : x)
        for (const T& b : y) den *= a - b;
    return checked_div(vandermonde_desc(x), den);
}

}  // namespace

template <Scalar T>
T elliptic_source_via_difference_ops(const EllipticParams<T>& e, Side side, const Truncation& trunc) {
    const std::size_t n = e.u.size();
    if (e.v.size() != n) throw DomainError("elliptic source functions need |u| = |v|");
    auto th = [&](const T& x) { return theta(x, e.p, trunc); };

    T num = th(e.lambda);
    for (const T& a : e.u)
        for (const T& b : e.v) num *= th(a / b);
    T den = from_int<T>(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            den *= e.u[j] * th(e.u[i] / e.u[j]) * th(e.v[j] / e.v[i]) / e.v[j];

    PointFunction<T> f = [&](const std::vector<T>& point) {
        std::vector<T> u, v;
        unpack(point, n, u, v);
        return det(frobenius_matrix(u, v, e.lambda, e.p, trunc));
    };
    const bool f_side = side == Side::F;
    if (!f_side && side != Side::G) throw DomainError("difference-operator forms cover F and G");
    const Shift<T> shift{ShiftKind::Multiplicative, e.q, f_side ? ShiftDirection::Inverse : ShiftDirection::Forward};
    const auto vars = f_side ? index_range(n, n) : index_range(0, n);
    return checked_div(num, den) * apply_difference_product(f, vars, shift, e.z, pack(e.u, e.v));
}

template <Scalar T>
T trig_source_via_difference_ops(const TrigParams<T>& tp, Side side) {
    const std::size_t n = tp.u.size();
    const std::size_t m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    if (side == Side::F) {
        PointFunction<T> f = [&](const std::vector<T>& point) {
            std::vector<T> u, v;
            unpack(point, n, u, v);
            return cauchy_ratio(v, u);
        };
        const Shift<T> shift{ShiftKind::Multiplicative, tp.q, ShiftDirection::Inverse};
        const T zeff = tp.z * ipow(tp.q, d - 1);
        return checked_div(from_int<T>(1), cauchy_ratio(tp.v, tp.u)) *
               apply_difference_product(f, index_range(n, m), shift, zeff, pack(tp.u, tp.v));
    }
    if (side != Side::G) throw DomainError("difference-operator forms cover F and G");
    // prod_{i<j}(u_j - u_i) / prod_{i,k}(v_i - u_k)
    auto g = [](const std::vector<T>& u, const std::vector<T>& v) {
        T den = from_int<T>(1);
        for (const T& a : v)
            for (const T& b : u) den *= a - b;
        return checked_div(vandermonde_desc(u), den);
    };
    PointFunction<T> f = [&](const std::vector<T>& point) {
        std::vector<T> u, v;
        unpack(point, n, u, v);
        return g(u, v);
    };
    const Shift<T> shift{ShiftKind::Multiplicative, tp.q, ShiftDirection::Forward};
    const T zeff = tp.z * ipow(tp.q, d);
    return qpoch_n(tp.z, tp.q, d) * checked_div(from_int<T>(1), g(tp.u, tp.v)) *
           apply_difference_product(f, index_range(0, n), shift, zeff, pack(tp.u, tp.v));
}

template <Scalar T>
T rational_source_via_difference_ops(const RationalParams<T>& rp, Side side) {
    const std::size_t n = rp.u.size();
    const std::size_t m = rp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    if (side == Side::F) {
        PointFunction<T> f = [&](const std::vector<T>& point) {
            std::vector<T> u, v;
            unpack(point, n, u, v);
            return cauchy_ratio(v, u);
        };
        const Shift<T> shift{ShiftKind::Additive, rp.c, ShiftDirection::Inverse};
        return checked_div(from_int<T>(1), cauchy_ratio(rp.v, rp.u)) *
               apply_difference_product(f, index_range(n, m), shift, rp.z, pack(rp.u, rp.v));
    }
    if (side != Side::G) throw DomainError("difference-operator forms cover F and G");
    PointFunction<T> f = [&](const std::vector<T>& point) {
        std::vector<T> u, v;
        unpack(point, n, u, v);
        return cauchy_ratio(u, v);
    };
    const Shift<T> shift{ShiftKind::Additive, rp.c, ShiftDirection::Forward};
    return ipow(from_int<T>(1) - rp.z, d) * checked_div(from_int<T>(1), cauchy_ratio(rp.u, rp.v)) *
           apply_difference_product(f, index_range(0, n), shift, rp.z, pack(rp.u, rp.v));
}

#define SRCID_INSTANTIATE(T)                                                                                    \
    template T subset_sum<T>(const SubsetTerms<T>&);                                                           \
    template T subset_sum_fixed<T>(const SubsetTerms<T>&, std::size_t);                                        \
    template T elliptic_source<T>(const EllipticParams<T>&, Side, const Truncation&);                          \
    template T trig_source<T>(const TrigParams<T>&, Side);                                                     \
    template T trig_lambda_source<T>(const TrigParams<T>&, Side);                                              \
    template T rational_source<T>(const RationalParams<T>&, Side);                                             \
    template double elliptic_source_scale<T>(const EllipticParams<T>&, Side, const Truncation&);               \
    template double trig_source_scale<T>(const TrigParams<T>&, Side);                                          \
    template double rational_source_scale<T>(const RationalParams<T>&, Side);                                  \
    template struct Shift<T>;                                                                                  \
    template T apply_difference_product<T>(const PointFunction<T>&, const std::vector<std::size_t>&,           \
                                           const Shift<T>&, const T&, const std::vector<T>&);                  \
    template T elliptic_source_via_difference_ops<T>(const EllipticParams<T>&, Side, const Truncation&);       \
    template T trig_source_via_difference_ops<T>(const TrigParams<T>&, Side);                                  \
    template T rational_source_via_difference_ops<T>(const RationalParams<T>&, Side);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

template ComplexLD subset_sum<ComplexLD>(const SubsetTerms<ComplexLD>&);
template ComplexLD elliptic_source<ComplexLD>(const EllipticParams<ComplexLD>&, Side, const Truncation&);

}  // namespace srcid
