#include <array>
#include <numeric>

#include "case_util.hpp"
#include "srcid/scalar.hpp"
#include "srcid/source.hpp"

namespace srcid {

using namespace cases;

namespace {

template <Scalar T>
std::vector<int> permutation(Sampler<T>& s, int size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = size - 1; i > 0; --i) std::swap(idx[i], idx[s.integer(0, i)]);
    return idx;
}

struct Split {
    std::vector<int> I, J;
    std::vector<bool> in_I;
};

// Disjoint I, J in [0, pool) with |I| + |J| = count, split at random.
template <Scalar T>
Split random_split(Sampler<T>& s, int pool, int count) {
    Split sp;
    sp.in_I.assign(pool, false);
    const auto perm = permutation(s, pool);
    for (int t = 0; t < count; ++t) {
        if (s.integer(0, 1) == 0) {
            sp.I.push_back(perm[t]);
            sp.in_I[perm[t]] = true;
        } else {
            sp.J.push_back(perm[t]);
        }
    }
    return sp;
}

// Substituted vector {x_I, shift(x_J)} in random order.
template <Scalar T, class F>
std::vector<T> substitute(Sampler<T>& s, const std::vector<T>& x, const Split& sp, F shift) {
    std::vector<T> out;
    for (int i : sp.I) out.push_back(x[i]);
    for (int j : sp.J) out.push_back(shift(x[j]));
    const auto perm = permutation(s, static_cast<int>(out.size()));
    std::vector<T> shuffled;
    for (int p : perm) shuffled.push_back(out[p]);
    return shuffled;
}

template <Scalar T>
void protect_distinct(Sampler<T>& s, const std::vector<T>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s.protect(x[i] - x[j]);
}

template <Scalar T>
Evaluation<T> both_against(const T& p, const T& q, const T& closed) {
    return worse(compare(p, closed), compare(q, closed));
}

// Positions i != j in [0, size) and a source index k in [0, pool).
template <Scalar T>
std::array<int, 3> vanishing_slots(Sampler<T>& s, int size, int pool) {
    const auto perm = permutation(s, size);
    return {perm[0], perm[1], static_cast<int>(s.integer(0, pool - 1))};
}

template <Scalar T>
T trig_closed(const TrigParams<T>& tp, const Split& sp) {
    const T& q = tp.q;
    const auto& u = tp.u;
    const long ni = static_cast<long>(sp.I.size()), nj = static_cast<long>(sp.J.size());
    T c = ipow(-tp.z, nj) * ipow(q, ni * nj + nj * (nj - 1) / 2);
    for (int i : sp.I)
        for (int j : sp.J) c *= u[j] - u[i];
    for (int i : sp.I)
        for (std::size_t j = 0; j < u.size(); ++j) c *= u[i] - q * u[j];
    for (int j : sp.J)
        for (std::size_t k = 0; k < u.size(); ++k)
            if (!sp.in_I[k]) c *= q * u[j] - u[k];
    return c;
}

template <Scalar T>
T trig_closed_u(const TrigParams<T>& tp, const Split& sp) {
    const T& q = tp.q;
    const auto& v = tp.v;
    const long nj = static_cast<long>(sp.J.size());
    const long d = static_cast<long>(tp.v.size()) - static_cast<long>(tp.u.size());
    T c = ipow(-tp.z, nj) * ipow(q, -nj * (nj + 1) / 2) * qpoch_n(tp.z, q, d);
    for (int i : sp.I)
        for (int j : sp.J) c *= v[i] - v[j];
    for (int i : sp.I)
        for (std::size_t j = 0; j < v.size(); ++j) c *= v[j] - q * v[i];
    for (int j : sp.J)
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!sp.in_I[k]) c *= q * v[k] - v[j];
    return c;
}

template <Scalar T>
T rational_closed(const RationalParams<T>& rp, const Split& sp) {
    const auto& u = rp.u;
    const T& c = rp.c;
    T r = ipow(-rp.z, static_cast<long>(sp.J.size()));
    for (int i : sp.I)
        for (int j : sp.J) r *= u[j] - u[i];
    for (int i : sp.I)
        for (std::size_t j = 0; j < u.size(); ++j) r *= u[i] - u[j] - c;
    for (int j : sp.J)
        for (std::size_t k = 0; k < u.size(); ++k)
            if (!sp.in_I[k]) r *= u[j] - u[k] + c;
    return r;
}

template <Scalar T>
T rational_closed_u(const RationalParams<T>& rp, const Split& sp) {
    const auto& v = rp.v;
    const T& c = rp.c;
    const long d = static_cast<long>(rp.v.size()) - static_cast<long>(rp.u.size());
    T r = ipow(-rp.z, static_cast<long>(sp.J.size())) * ipow(from_int<T>(1) - rp.z, d);
    for (int i : sp.I)
        for (int j : sp.J) r *= v[i] - v[j];
    for (int i : sp.I)
        for (std::size_t j = 0; j < v.size(); ++j) r *= v[j] - v[i] - c;
    for (int j : sp.J)
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!sp.in_I[k]) r *= v[k] - v[j] + c;
    return r;
}

Complex elliptic_closed(const EllipticParams<Complex>& e, const Split& sp) {
    auto th = [&](const Complex& x) { return theta(x, e.p); };
    const auto& u = e.u;
    const long nj = static_cast<long>(sp.J.size());
    Complex c = ipow(-e.z, nj) * ipow(e.q, nj * (nj - 1) / 2) * th(e.lambda);
    for (int i : sp.I)
        for (int j : sp.J) c *= th(u[i] / u[j]);
    for (int i : sp.I)
        for (const Complex& uj : u) c *= th(e.q * uj / u[i]);
    for (int i : sp.J)
        for (int j : sp.J) c *= th(u[i] / (e.q * u[j]));
    return c;
}

template <Scalar T>
Evaluation<T> trig_vanish(const TrigParams<T>& tp) {
    return worse(vanishing(trig_source(tp, Side::P), trig_source_scale(tp, Side::P)),
                 vanishing(trig_source(tp, Side::Q), trig_source_scale(tp, Side::Q)));
}

template <Scalar T>
Evaluation<T> rational_vanish(const RationalParams<T>& rp) {
    return worse(vanishing(rational_source(rp, Side::P), rational_source_scale(rp, Side::P)),
                 vanishing(rational_source(rp, Side::Q), rational_source_scale(rp, Side::Q)));
}

std::vector<Shape> filtered(int N, bool (*keep)(const Shape&)) {
    std::vector<Shape> out;
    for (const Shape& sh : pairs(0, N))
        if (keep(sh)) out.push_back(sh);
    return out;
}

}  // namespace

void register_special_cases(std::vector<CaseDef>& out) {
    // ------------------------------------------------------------ vanishing

    CaseBuilder("spec_trig_vanishing", "trigvanishinglemma", "trig", "specialization",
                "P = Q = 0 at v_i = u_k, v_j = q u_k (m <= n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.m >= 2 && s.n >= 1 && s.m <= s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.m);
            const auto [i, j, k] = vanishing_slots(s, sh.m, sh.n);
            tp.v[i] = tp.u[k];
            tp.v[j] = tp.q * tp.u[k];
            protect_distinct(s, tp.v);
            return trig_vanish(tp);
        })
        .into(out);

    CaseBuilder("spec_trig_vanishing_m_gt_n", "trigvanishinglemma", "trig", "specialization",
                "P = Q = 0 at u_i = v_k, u_j = v_k / q (m > n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.n >= 2 && s.m > s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.m);
            const auto [i, j, k] = vanishing_slots(s, sh.n, sh.m);
            tp.u[i] = tp.v[k];
            tp.u[j] = tp.v[k] / tp.q;
            protect_distinct(s, tp.u);
            return trig_vanish(tp);
        })
        .into(out);

    CaseBuilder("spec_rational_vanishing", "vanishinglemma", "rational", "specialization",
                "P = Q = 0 at v_i = u_k, v_j = u_k + c (m <= n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.m >= 2 && s.n >= 1 && s.m <= s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            const auto [i, j, k] = vanishing_slots(s, sh.m, sh.n);
            rp.v[i] = rp.u[k];
            rp.v[j] = rp.u[k] + rp.c;
            protect_distinct(s, rp.v);
            return rational_vanish(rp);
        })
        .into(out);

    CaseBuilder("spec_rational_vanishing_m_gt_n", "vanishinglemma", "rational", "specialization",
                "P = Q = 0 at u_i = v_k, u_j = v_k - c (m > n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.n >= 2 && s.m > s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            const auto [i, j, k] = vanishing_slots(s, sh.n, sh.m);
            rp.u[i] = rp.v[k];
            rp.u[j] = rp.v[k] - rp.c;
            protect_distinct(s, rp.u);
            return rational_vanish(rp);
        })
        .into(out);

    CaseBuilder("spec_elliptic_vanishing", "ellipticvanishinglemma", "elliptic", "specialization",
                "P = Q = 0 at v_i = u_k, v_j = q u_k")
        .sizes(4, 5)
        .shapes([](int N) { return square(2, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto e = sample_elliptic(s, sh.n);
            const auto [i, j, k] = vanishing_slots(s, sh.n, sh.n);
            e.v[i] = e.u[k];
            e.v[j] = e.q * e.u[k];
            for (std::size_t a = 0; a < e.v.size(); ++a)
                for (std::size_t b = 0; b < e.v.size(); ++b)
                    if (a != b) s.protect(theta(e.v[a] / e.v[b], e.p));
            // Surviving terms carry rounding-level theta factors, so the size of P
            // and Q is read off a nearby point with both slots moved by 1%.
            auto near = e;
            near.v[i] *= Complex(1.01, 0.0);
            near.v[j] *= Complex(0.0, 1.0) * 0.01 + 1.0;
            auto scale = [&](Side side) {
                return std::max(elliptic_source_scale(e, side), elliptic_source_scale(near, side));
            };
            return worse(vanishing(elliptic_source(e, Side::P), scale(Side::P)),
                         vanishing(elliptic_source(e, Side::Q), scale(Side::Q)));
        })
        .into(out);

    // ----------------------------------------------------------- evaluations

    CaseBuilder("spec_trig_evaluation", "trigPQspecializations", "trig", "specialization",
                "P and Q at v = {u_I, q u_J} against the factorized value (m <= n)")
        .sizes(5, 7)
        .shapes([](int N) { return ordered(0, N, false); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.m);
            const Split sp = random_split(s, sh.n, sh.m);
            const auto q = tp.q;
            tp.v = substitute(s, tp.u, sp, [&](const auto& x) { return q * x; });
            protect_distinct(s, tp.v);
            return both_against(trig_source(tp, Side::P), trig_source(tp, Side::Q), trig_closed(tp, sp));
        })
        .into(out);

    CaseBuilder("spec_trig_evaluation_m_gt_n", "trigPQspecializations", "trig", "specialization",
                "P and Q at u = {v_I, v_J / q} against the factorized value (m > n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.m > s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.m);
            const Split sp = random_split(s, sh.m, sh.n);
            const auto q = tp.q;
            tp.u = substitute(s, tp.v, sp, [&](const auto& x) { return x / q; });
            protect_distinct(s, tp.u);
            return both_against(trig_source(tp, Side::P), trig_source(tp, Side::Q), trig_closed_u(tp, sp));
        })
        .into(out);

    CaseBuilder("spec_rational_evaluation", "PQspecializations", "rational", "specialization",
                "P and Q at v = {u_I, u_J + c} against the factorized value (m <= n)")
        .sizes(5, 7)
        .shapes([](int N) { return ordered(0, N, false); })
        .both([](auto& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            const Split sp = random_split(s, sh.n, sh.m);
            const auto c = rp.c;
            rp.v = substitute(s, rp.u, sp, [&](const auto& x) { return x + c; });
            protect_distinct(s, rp.v);
            return both_against(rational_source(rp, Side::P), rational_source(rp, Side::Q), rational_closed(rp, sp));
        })
        .into(out);

    CaseBuilder("spec_rational_evaluation_m_gt_n", "PQspecializations", "rational", "specialization",
                "P and Q at u = {v_I, v_J - c} against the factorized value (m > n)")
        .sizes(5, 7)
        .shapes([](int N) { return filtered(N, [](const Shape& s) { return s.m > s.n; }); })
        .both([](auto& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            const Split sp = random_split(s, sh.m, sh.n);
            const auto c = rp.c;
            rp.u = substitute(s, rp.v, sp, [&](const auto& x) { return x - c; });
            protect_distinct(s, rp.u);
            return both_against(rational_source(rp, Side::P), rational_source(rp, Side::Q),
                                rational_closed_u(rp, sp));
        })
        .into(out);

    CaseBuilder("spec_elliptic_evaluation", "ellipticPQspecializations", "elliptic", "specialization",
                "P and Q at v = {u_I, q u_J} against the factorized theta value")
        .sizes(4, 5)
        .shapes([](int N) { return square(0, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto e = sample_elliptic(s, sh.n);
            const Split sp = random_split(s, sh.n, sh.n);
            const Complex q = e.q;
            e.v = substitute(s, e.u, sp, [&](const Complex& x) { return q * x; });
            for (std::size_t a = 0; a < e.v.size(); ++a)
                for (std::size_t b = 0; b < e.v.size(); ++b)
                    if (a != b) s.protect(theta(e.v[a] / e.v[b], e.p));
            return both_against(elliptic_source(e, Side::P), elliptic_source(e, Side::Q), elliptic_closed(e, sp));
        })
        .into(out);

    CaseBuilder("spec_elliptic_quasiperiodicity", "quasiperiodicities", "elliptic", "specialization",
                "P and Q under v_k -> p v_k against the printed multiplier")
        .sizes(4, 5)
        .shapes([](int N) { return square(1, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto e = sample_elliptic(s, sh.n);
            const int k = static_cast<int>(s.integer(0, sh.n - 1));
            const long n = sh.n;
            Complex mult = ipow(-1.0 / e.p, n + 1) * ipow(e.q, n) * e.lambda * ipow(e.v[k], -n - 1);
            for (const Complex& u : e.u) mult *= u * u;
            for (int j = 0; j < sh.n; ++j)
                if (j != k) mult /= e.v[j];
            auto shifted = e;
            shifted.v[k] *= e.p;
            protect_elliptic(s, shifted);
            return worse(compare(elliptic_source(shifted, Side::P), mult * elliptic_source(e, Side::P)),
                         compare(elliptic_source(shifted, Side::Q), mult * elliptic_source(e, Side::Q)));
        })
        .into(out);
}

}  // namespace srcid
