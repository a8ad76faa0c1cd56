#include "srcid/det_rep.hpp"

namespace srcid {

std::string to_string(DetFamily f) {
    switch (f) {
        case DetFamily::MPT: return "MPT";
        case DetFamily::ScalarProduct: return "scalar_product";
        case DetFamily::DWBC: return "DWBC";
        case DetFamily::BS: return "BS";
        case DetFamily::BSLimit: return "BS_limit";
        case DetFamily::IK: return "IK";
    }
    return "?";
}

DetFamily parse_det_family(const std::string& name) {
    for (auto f : {DetFamily::MPT, DetFamily::ScalarProduct, DetFamily::DWBC, DetFamily::BS, DetFamily::BSLimit,
                   DetFamily::IK})
        if (to_string(f) == name) return f;
    throw DomainError("unknown determinant family: " + name);
}

bool family_available(Regime regime, DetFamily family) {
    switch (regime) {
        case Regime::Elliptic: return family == DetFamily::MPT || family == DetFamily::BS;
        case Regime::Trig:
        case Regime::TrigLambda: return family != DetFamily::IK;
        case Regime::Rational: return true;
    }
    return false;
}

bool family_needs_rows(DetFamily family) { return family == DetFamily::MPT || family == DetFamily::BS; }

namespace {

template <Scalar T>
T one() {
    return from_int<T>(1);
}

template <Scalar T>
T vandermonde_desc(const std::vector<T>& x) {  // prod_{i<j}(x_j - x_i)
    T acc = one<T>();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) acc *= x[j] - x[i];
    return acc;
}

template <Scalar T>
T prod_except(const std::vector<T>& x, std::size_t skip) {
    T acc = one<T>();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i != skip) acc *= x[i];
    return acc;
}

// Row i of the mixed basis: sum_k mix(i, k) basis(k, x).
template <Scalar T, class Basis>
T mixed(const Matrix<T>& mix, std::size_t i, std::size_t size, Basis basis) {
    T acc = from_int<T>(0);
    for (std::size_t k = 0; k < size; ++k) acc += mix(i, k) * basis(k + 1);
    return acc;
}

void require_rows(std::size_t size, DetFamily family) {
    if (size == 0 && family_needs_rows(family))
        throw DomainError(to_string(family) + " representation needs at least one row");
}

template <Scalar T>
void require_mix(const Matrix<T>& mix, std::size_t size, const char* what) {
    if (mix.rows() != size || mix.cols() != size) throw DomainError(std::string("aux matrix ") + what + " has the wrong size");
}

template <Scalar T>
void require_eta(const std::vector<T>& eta, std::size_t size) {
    if (eta.size() != size) throw DomainError("aux eta has the wrong length");
}

// ---------------------------------------------------------------- trig

template <Scalar T>
T trig_mpt(const TrigParams<T>& tp, Side side, const AuxParams<T>& aux) {
    const std::size_t n = tp.u.size(), m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& q = tp.q;
    const T zero = from_int<T>(0);
    const bool f_side = side == Side::F;
    const std::size_t size = f_side ? m : n;
    const auto& x = f_side ? tp.v : tp.u;
    const Matrix<T>& mix = f_side ? aux.p_mix : aux.q_mix;
    require_mix(mix, size, f_side ? "P" : "Q");
    const long sz = static_cast<long>(size);
    const T px = product(x);
    const T shift = f_side ? one<T>() / q : q;
    const T h0 = checked_div(one<T>(), one<T>() - aux.r * px);
    const T h1 = checked_div(one<T>(), one<T>() - shift * aux.r * px);
    const T coeff = f_side ? ipow(q, static_cast<long>(m) - 1) * tp.z : ipow(q, d) * tp.z;

    Matrix<T> a(size, size), mtx(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        T phi = one<T>();
        if (f_side) {
            for (const T& u : tp.u) phi *= checked_div(x[j] - u, x[j] - q * u);
        } else {
            for (const T& v : tp.v) phi *= checked_div(v - x[j], v - q * x[j]);
        }
        const T xs = shift * x[j];
        for (std::size_t i = 0; i < size; ++i) {
            const T aij = mixed(mix, i, size, [&](long k) { return psi_A(k, sz, x[j], zero, aux.r); });
            const T bij = mixed(mix, i, size, [&](long k) { return psi_A(k, sz, xs, zero, aux.r); });
            a(i, j) = aij;
            mtx(i, j) = (i == 0 ? h0 : one<T>()) * aij - coeff * (i == 0 ? h1 : one<T>()) * bij * phi;
        }
    }
    T value = checked_div((one<T>() - aux.r * px) * det(mtx), det(a));
    return f_side ? value : qpoch_n(tp.z, q, d) * value;
}

template <Scalar T>
T trig_scalar_product(const TrigParams<T>& tp, Side side) {
    const std::size_t n = tp.u.size(), m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& q = tp.q;
    if (side == Side::F) {
        Matrix<T> mtx(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            T phi = one<T>();
            for (const T& u : tp.u) phi *= checked_div(tp.v[j] - u, tp.v[j] - q * u);
            for (std::size_t i = 0; i < m; ++i) {
                const T base = ipow(tp.v[j], static_cast<long>(i));
                mtx(i, j) = base - tp.z * ipow(q, static_cast<long>(m - 1 - i)) * base * phi;
            }
        }
        return checked_div(det(mtx), vandermonde_desc(tp.v));
    }
    Matrix<T> mtx(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        T phi = one<T>();
        for (const T& v : tp.v) phi *= checked_div(v - tp.u[j], v - q * tp.u[j]);
        for (std::size_t i = 0; i < n; ++i) {
            const T base = ipow(tp.u[j], static_cast<long>(i));
            mtx(i, j) = base - tp.z * ipow(q, d + static_cast<long>(i)) * base * phi;
        }
    }
    return qpoch_n(tp.z, q, d) * checked_div(det(mtx), vandermonde_desc(tp.u));
}

// prod_{i<j<=m}(v_j - v_i) prod_{i<j<=n}(u_i - u_j) over prod (v_i - u_k)
// (n >= m), or its U/V counterpart.
template <Scalar T>
T dwbc_prefactor(const std::vector<T>& u, const std::vector<T>& v) {
    const std::size_t n = u.size(), m = v.size();
    T num = one<T>(), den = one<T>();
    if (n >= m) {
        for (const T& a : v)
            for (const T& b : u) num *= a - b;
        den = vandermonde_desc(v);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) den *= u[i] - u[j];
    } else {
        for (const T& a : v)
            for (const T& b : u) num *= b - a;
        den = vandermonde_desc(u);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) den *= v[i] - v[j];
    }
    return checked_div(num, den);
}

template <Scalar T>
T trig_bs(const TrigParams<T>& tp, Side side, const AuxParams<T>& aux, bool limit) {
    const std::size_t n = tp.u.size(), m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& q = tp.q;
    const bool f_side = side == Side::F;
    const std::size_t size = f_side ? m : n;
    const auto& x = f_side ? tp.v : tp.u;
    const auto& eta = f_side ? aux.eta_v : aux.eta_u;
    require_eta(eta, size);
    const T& delta = aux.delta;
    const T pe = product(eta);
    const T px = product(x);
    // F shifts x -> x/q with eta -> q eta in the cofactor; G shifts x -> q x.
    const T coeff = f_side ? tp.z : ipow(q, d) * tp.z;

    T h0 = one<T>(), h1 = one<T>();
    if (!limit) {
        h0 = checked_div(one<T>(), px - delta * pe);
        h1 = checked_div(one<T>(), (f_side ? px / q : q * px) - delta * pe);
    }
    Matrix<T> mtx(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        T phi = one<T>();
        if (f_side) {
            for (const T& u : tp.u) phi *= checked_div(x[i] - u, x[i] - q * u);
        } else {
            for (const T& v : tp.v) phi *= checked_div(x[i] - v, q * x[i] - v);
        }
        for (std::size_t j = 0; j < size; ++j) {
            T a = one<T>(), b = one<T>();
            for (std::size_t k = 0; k < size; ++k) {
                if (k == j) continue;
                a *= x[i] - eta[k];
                b *= f_side ? x[i] - q * eta[k] : q * x[i] - eta[k];
            }
            if (!limit) {
                a = a * (x[i] - delta * eta[j]) / (one<T>() - delta);
                b = b * ((f_side ? x[i] / q : q * x[i]) - delta * eta[j]) / (one<T>() - delta);
            }
            mtx(i, j) = (i == 0 ? h0 : one<T>()) * a - coeff * (i == 0 ? h1 : one<T>()) * b * phi;
        }
    }
    T den = vandermonde_desc(x);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) den *= eta[i] - eta[j];
    T value = checked_div(det(mtx), den);
    if (!limit) value *= one<T>() - delta;
    return f_side ? value : qpoch_n(tp.z, q, d) * value;
}

// ------------------------------------------------------------ rational

template <Scalar T>
T rational_mpt(const RationalParams<T>& rp, Side side, const AuxParams<T>& aux) {
    const std::size_t n = rp.u.size(), m = rp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& c = rp.c;
    const T zero = from_int<T>(0);
    const bool f_side = side == Side::F;
    const std::size_t size = f_side ? m : n;
    const auto& x = f_side ? rp.v : rp.u;
    const Matrix<T>& mix = f_side ? aux.p_mix : aux.q_mix;
    require_mix(mix, size, f_side ? "P" : "Q");
    const long sz = static_cast<long>(size);
    const T px = product(x);
    const T h0 = checked_div(one<T>(), one<T>() - aux.r * px);

    Matrix<T> a(size, size), mtx(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        const T xs = f_side ? x[j] - c : x[j] + c;
        T phi = one<T>();
        if (f_side) {
            for (const T& u : rp.u) phi *= checked_div(x[j] - u, x[j] - u - c);
        } else {
            for (const T& v : rp.v) phi *= checked_div(x[j] - v, x[j] - v + c);
        }
        const T h1 = checked_div(one<T>(), one<T>() - aux.r * xs * prod_except(x, j));
        for (std::size_t i = 0; i < size; ++i) {
            const T aij = mixed(mix, i, size, [&](long k) { return psi_A(k, sz, x[j], zero, aux.r); });
            const T bij = mixed(mix, i, size, [&](long k) { return psi_A(k, sz, xs, zero, aux.r); });
            a(i, j) = aij;
            mtx(i, j) = (i == 0 ? h0 : one<T>()) * aij - rp.z * (i == 0 ? h1 : one<T>()) * bij * phi;
        }
    }
    T value = checked_div((one<T>() - aux.r * px) * det(mtx), det(a));
    return f_side ? value : ipow(one<T>() - rp.z, d) * value;
}

template <Scalar T>
T rational_scalar_product(const RationalParams<T>& rp, Side side) {
    const std::size_t n = rp.u.size(), m = rp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& c = rp.c;
    const bool f_side = side == Side::F;
    const std::size_t size = f_side ? m : n;
    const auto& x = f_side ? rp.v : rp.u;
    Matrix<T> mtx(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        T phi = one<T>();
        if (f_side) {
            for (const T& u : rp.u) phi *= checked_div(x[j] - u, x[j] - u - c);
        } else {
            for (const T& v : rp.v) phi *= checked_div(x[j] - v, x[j] - v + c);
        }
        const T xs = f_side ? x[j] - c : x[j] + c;
        for (std::size_t i = 0; i < size; ++i) {
            const long e = static_cast<long>(i);
            mtx(i, j) = ipow(x[j], e) - rp.z * ipow(xs, e) * phi;
        }
    }
    T value = checked_div(det(mtx), vandermonde_desc(x));
    return f_side ? value : ipow(one<T>() - rp.z, d) * value;
}

template <Scalar T>
T rational_bs(const RationalParams<T>& rp, Side side, const AuxParams<T>& aux, bool limit) {
    const std::size_t n = rp.u.size(), m = rp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& c = rp.c;
    const bool f_side = side == Side::F;
    const std::size_t size = f_side ? m : n;
    const auto& x = f_side ? rp.v : rp.u;
    const auto& eta = f_side ? aux.eta_v : aux.eta_u;
    require_eta(eta, size);
    const T& delta = aux.delta;
    const T pe = product(eta);
    const T px = product(x);
    const T cs = f_side ? -c : c;  // additive shift of the row variable

    Matrix<T> mtx(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        const T xs = x[i] + cs;
        T phi = one<T>();
        if (f_side) {
            for (const T& u : rp.u) phi *= checked_div(x[i] - u, x[i] - u - c);
        } else {
            for (const T& v : rp.v) phi *= checked_div(x[i] - v, x[i] - v + c);
        }
        T h0 = one<T>(), h1 = one<T>();
        if (!limit && i == 0) {
            h0 = checked_div(one<T>(), px - delta * pe);
            h1 = checked_div(one<T>(), xs * prod_except(x, i) - delta * pe);
        }
        for (std::size_t j = 0; j < size; ++j) {
            T a = one<T>(), b = one<T>();
            for (std::size_t k = 0; k < size; ++k) {
                if (k == j) continue;
                a *= x[i] - eta[k];
                b *= xs - eta[k];
            }
            if (!limit) {
                a = a * (x[i] - delta * eta[j]) / (one<T>() - delta);
                b = b * (xs - delta * eta[j]) / (one<T>() - delta);
            }
            mtx(i, j) = h0 * a - rp.z * h1 * b * phi;
        }
    }
    T den = vandermonde_desc(x);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) den *= eta[i] - eta[j];
    T value = checked_div(det(mtx), den);
    if (!limit) value *= one<T>() - delta;
    return f_side ? value : ipow(one<T>() - rp.z, d) * value;
}

// ------------------------------------------------------------ elliptic

template <Scalar T>
T elliptic_mpt(const EllipticParams<T>& e, Side side, const AuxParams<T>& aux, const Truncation& trunc) {
    const std::size_t n = e.u.size();
    auto th = [&](const T& x) { return theta(x, e.p, trunc); };
    const bool f_side = side == Side::F;
    const Matrix<T>& mix = f_side ? aux.p_mix : aux.q_mix;
    require_mix(mix, n, f_side ? "P" : "Q");
    const long sz = static_cast<long>(n);
    const T ratio = e.lambda * product(e.u) / product(e.v);
    // F uses the inverted v variables, G the u variables.
    std::vector<T> x;
    for (std::size_t j = 0; j < n; ++j) x.push_back(f_side ? one<T>() / e.v[j] : e.u[j]);
    const T rx = aux.r * product(x);
    const T h0 = checked_div(th(ratio), th(rx));
    const T h1 = checked_div(th(e.q * ratio), th(e.q * rx));

    Matrix<T> a(n, n), mtx(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        T phi = one<T>();
        for (std::size_t l = 0; l < n; ++l) {
            phi *= f_side ? checked_div(th(e.u[l] / e.v[j]), th(e.q * e.u[l] / e.v[j]))
                          : checked_div(th(e.u[j] / e.v[l]), th(e.q * e.u[j] / e.v[l]));
        }
        const T xs = e.q * x[j];
        for (std::size_t i = 0; i < n; ++i) {
            const T aij = mixed(mix, i, n, [&](long k) { return psi_A(k, sz, x[j], e.p, aux.r, trunc); });
            const T bij = mixed(mix, i, n, [&](long k) { return psi_A(k, sz, xs, e.p, aux.r, trunc); });
            a(i, j) = aij;
            mtx(i, j) = (i == 0 ? h0 : one<T>()) * aij - e.z * (i == 0 ? h1 : one<T>()) * bij * phi;
        }
    }
    return checked_div(th(rx) * det(mtx), det(a));
}

template <Scalar T>
T elliptic_bs(const EllipticParams<T>& e, Side side, const AuxParams<T>& aux, const Truncation& trunc) {
    const std::size_t n = e.u.size();
    auto th = [&](const T& x) { return theta(x, e.p, trunc); };
    const bool f_side = side == Side::F;
    const auto& eta = f_side ? aux.eta_v : aux.eta_u;
    require_eta(eta, n);
    const T& delta = aux.delta;
    const T& q = e.q;
    const T ratio = e.lambda * product(e.u) / product(e.v);
    const T th_delta = th(delta);
    const T dratio = f_side ? delta * product(eta) / product(e.v) : delta * product(e.u) / product(eta);
    const T h0 = checked_div(th(ratio), th(dratio));
    const T h1 = checked_div(th(q * ratio), th(q * dratio));

    Matrix<T> mtx(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T a = one<T>(), b = one<T>(), phi = one<T>();
            if (f_side) {
                // rows follow eta_i, columns follow v_j
                a = th(delta * eta[i] / e.v[j]);
                b = th(q * delta * eta[i] / e.v[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i) {
                        a *= th(eta[k] / e.v[j]);
                        b *= th(q * eta[k] / e.v[j]);
                    }
                    phi *= checked_div(th(e.u[k] / e.v[j]), th(q * e.u[k] / e.v[j]));
                }
            } else {
                // rows follow u_i, columns follow eta_j
                a = th(delta * e.u[i] / eta[j]);
                b = th(q * delta * e.u[i] / eta[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != j) {
                        a *= th(e.u[i] / eta[k]);
                        b *= th(q * e.u[i] / eta[k]);
                    }
                    phi *= checked_div(th(e.u[i] / e.v[k]), th(q * e.u[i] / e.v[k]));
                }
            }
            mtx(i, j) = (i == 0 ? h0 : one<T>()) * a / th_delta - e.z * (i == 0 ? h1 : one<T>()) * b / th_delta * phi;
        }
    }
    T den = one<T>();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            den *= f_side ? th(e.v[j] / e.v[i]) * eta[j] * th(eta[i] / eta[j]) / e.v[j]
                          : e.u[j] * th(e.u[i] / e.u[j]) * th(eta[j] / eta[i]) / eta[j];
        }
    }
    return checked_div(th_delta * det(mtx), den);
}

}  // namespace

template <Scalar T>
Matrix<T> build_dwbc_matrix(const TrigParams<T>& tp, Side side) {
    const std::size_t n = tp.u.size(), m = tp.v.size();
    const long d = static_cast<long>(m) - static_cast<long>(n);
    const T& q = tp.q;
    const T zq = tp.z * ipow(q, d);
    const bool f_side = side == Side::F;
    if (n >= m) {
        Matrix<T> y(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i < m) {
                    y(i, j) = checked_div(one<T>(), tp.v[i] - tp.u[j]) - zq * checked_div(one<T>(), tp.v[i] - q * tp.u[j]);
                } else {
                    const T mono = ipow(tp.u[j], static_cast<long>(n - 1 - i));
                    y(i, j) = f_side ? mono : mono - ipow(q, static_cast<long>(m) - static_cast<long>(i) - 1) * tp.z * mono;
                }
            }
        }
        return y;
    }
    Matrix<T> x(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i < n) {
                x(i, j) = checked_div(one<T>(), tp.u[i] - tp.v[j]) - zq * checked_div(one<T>(), q * tp.u[i] - tp.v[j]);
            } else {
                const T mono = ipow(tp.v[j], static_cast<long>(m - 1 - i));
                x(i, j) = f_side ? mono - tp.z * ipow(q, static_cast<long>(i) - static_cast<long>(n)) * mono : mono;
            }
        }
    }
    return x;
}

template <Scalar T>
Matrix<T> build_dwbc_matrix(const RationalParams<T>& rp, Side side) {
    const std::size_t n = rp.u.size(), m = rp.v.size();
    const T& c = rp.c;
    const bool f_side = side == Side::F;
    if (n >= m) {
        Matrix<T> y(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i < m) {
                    y(i, j) = checked_div(one<T>(), rp.v[i] - rp.u[j]) - rp.z * checked_div(one<T>(), rp.v[i] - rp.u[j] - c);
                } else {
                    const long e = static_cast<long>(n - 1 - i);
                    y(i, j) = f_side ? ipow(rp.u[j], e) : ipow(rp.u[j], e) - rp.z * ipow(rp.u[j] + c, e);
                }
            }
        }
        return y;
    }
    Matrix<T> x(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i < n) {
                x(i, j) = checked_div(one<T>(), rp.u[i] - rp.v[j]) - rp.z * checked_div(one<T>(), rp.u[i] - rp.v[j] + c);
            } else {
                const long e = static_cast<long>(m - 1 - i);
                x(i, j) = f_side ? ipow(rp.v[j], e) - rp.z * ipow(rp.v[j] - c, e) : ipow(rp.v[j], e);
            }
        }
    }
    return x;
}

template <Scalar T>
T izergin_korepin(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
    const std::size_t n = u.size();
    if (v.size() != n) throw DomainError("izergin_korepin needs |u| = |v|");
    T num = ipow(-c, static_cast<long>(n));
    Matrix<T> mtx(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const T a = v[i] - u[k];
            const T b = v[i] - u[k] - c;
            num *= a * b;
            mtx(i, k) = checked_div(one<T>(), a * b);
        }
    }
    T den = vandermonde_desc(v);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) den *= u[i] - u[j];
    return checked_div(num, den) * det(mtx);
}

template <Scalar T>
T det_rep(const EllipticParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux,
          const Truncation& trunc) {
    if (!family_available(Regime::Elliptic, family)) throw DomainError(to_string(family) + " is not an elliptic family");
    if (side != Side::F && side != Side::G) throw DomainError("determinant representations cover F and G");
    if (params.v.size() != params.u.size()) throw DomainError("elliptic source functions need |u| = |v|");
    require_rows(params.u.size(), family);
    return family == DetFamily::MPT ? elliptic_mpt(params, side, aux, trunc) : elliptic_bs(params, side, aux, trunc);
}

template <Scalar T>
T det_rep(const TrigParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux) {
    if (!family_available(Regime::Trig, family)) throw DomainError(to_string(family) + " is not a trig family");
    if (side != Side::F && side != Side::G) throw DomainError("determinant representations cover F and G");
    require_rows(side == Side::F ? params.v.size() : params.u.size(), family);
    switch (family) {
        case DetFamily::MPT: return trig_mpt(params, side, aux);
        case DetFamily::ScalarProduct: return trig_scalar_product(params, side);
        case DetFamily::DWBC: {
            const long d = static_cast<long>(params.v.size()) - static_cast<long>(params.u.size());
            const T value = dwbc_prefactor(params.u, params.v) * det(build_dwbc_matrix(params, side));
            return side == Side::F ? value : qpoch_n(params.z, params.q, d) * value;
        }
        case DetFamily::BS: return trig_bs(params, side, aux, false);
        case DetFamily::BSLimit: return trig_bs(params, side, aux, true);
        case DetFamily::IK: break;
    }
    throw DomainError("unavailable family");
}

template <Scalar T>
T det_rep(const RationalParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux) {
    if (family == DetFamily::IK) {
        if (params.u.size() != params.v.size()) throw DomainError("IK needs n = m");
        if (params.z != from_int<T>(1)) throw DomainError("IK needs z = 1");
        return izergin_korepin(params.u, params.v, params.c);
    }
    if (side != Side::F && side != Side::G) throw DomainError("determinant representations cover F and G");
    require_rows(side == Side::F ? params.v.size() : params.u.size(), family);
    switch (family) {
        case DetFamily::MPT: return rational_mpt(params, side, aux);
        case DetFamily::ScalarProduct: return rational_scalar_product(params, side);
        case DetFamily::DWBC: {
            const long d = static_cast<long>(params.v.size()) - static_cast<long>(params.u.size());
            const T value = dwbc_prefactor(params.u, params.v) * det(build_dwbc_matrix(params, side));
            return side == Side::F ? value : ipow(one<T>() - params.z, d) * value;
        }
        case DetFamily::BS: return rational_bs(params, side, aux, false);
        case DetFamily::BSLimit: return rational_bs(params, side, aux, true);
        case DetFamily::IK: break;
    }
    throw DomainError("unavailable family");
}

#define SRCID_INSTANTIATE(T)                                                                                    \
    template T det_rep<T>(const EllipticParams<T>&, DetFamily, Side, const AuxParams<T>&, const Truncation&);  \
    template T det_rep<T>(const TrigParams<T>&, DetFamily, Side, const AuxParams<T>&);                         \
    template T det_rep<T>(const RationalParams<T>&, DetFamily, Side, const AuxParams<T>&);                     \
    template Matrix<T> build_dwbc_matrix<T>(const TrigParams<T>&, Side);                                       \
    template Matrix<T> build_dwbc_matrix<T>(const RationalParams<T>&, Side);                                   \
    template T izergin_korepin<T>(const std::vector<T>&, const std::vector<T>&, const T&);

SRCID_INSTANTIATE(Complex)
SRCID_INSTANTIATE(Rational)

#undef SRCID_INSTANTIATE

template ComplexLD det_rep<ComplexLD>(const EllipticParams<ComplexLD>&, DetFamily, Side, const AuxParams<ComplexLD>&,
                                      const Truncation&);

}  // namespace srcid
