#include <bit>
#include <cmath>

#include "case_util.hpp"
#include "srcid/scalar.hpp"
#include "srcid/source.hpp"

namespace srcid {

using namespace cases;

namespace {

template <Scalar T>
Evaluation<T> sides(const T& a, const T& b) {
    return compare(a, b);
}

template <Scalar T>
TrigParams<T> inverted(const TrigParams<T>& tp) {
    // u' = 1/v, v' = 1/u, z' = q^{m-n} z
    TrigParams<T> out;
    out.q = tp.q;
    const long d = static_cast<long>(tp.v.size()) - static_cast<long>(tp.u.size());
    out.z = ipow(tp.q, d) * tp.z;
    for (const T& v : tp.v) out.u.push_back(from_int<T>(1) / v);
    for (const T& u : tp.u) out.v.push_back(from_int<T>(1) / u);
    return out;
}

// sum_l (-z)^l q^{l(l-1)/2} [n-m, l]_q F(u|v|q^l lambda) with base q^{n-m} z.
template <Scalar T>
T extended_trig_lhs(const TrigParams<T>& tp) {
    const long d = static_cast<long>(tp.u.size()) - static_cast<long>(tp.v.size());
    TrigParams<T> shifted = tp;
    shifted.z = ipow(tp.q, d) * tp.z;
    T total = from_int<T>(0);
    for (long l = 0; l <= d; ++l) {
        shifted.lambda = ipow(tp.q, l) * *tp.lambda;
        total += ipow(-tp.z, l) * ipow(tp.q, l * (l - 1) / 2) * q_binomial(d, l, tp.q) *
                 trig_lambda_source(shifted, Side::F);
    }
    return total;
}

double trig_to_rational_gap(double eps, const std::vector<Complex>& x, const std::vector<Complex>& y,
                            const Complex& c_half, const Complex& z) {
    TrigParams<Complex> tp;
    tp.q = std::exp(2.0 * eps * c_half);
    tp.z = z;
    for (const Complex& xi : x) tp.u.push_back(std::exp(eps * xi));
    for (const Complex& yi : y) tp.v.push_back(std::exp(eps * yi));
    RationalParams<Complex> rp{2.0 * c_half, z, x, y};
    const Complex a = trig_source(tp, Side::F);
    const Complex b = rational_source(rp, Side::F);
    return relative_residual(a, b);
}

}  // namespace

void register_source_cases(std::vector<CaseDef>& out) {
    const auto all_pairs = [](int N) { return pairs(0, N); };

    for (const char* sd : {"F_eq_G", "P_eq_Q"}) {
        const bool cleared = std::string(sd) == "P_eq_Q";
        const Side a = cleared ? Side::P : Side::F;
        const Side b = cleared ? Side::Q : Side::G;

        CaseBuilder(std::string("rational_") + sd, "rationalKajihara", "rational", "source",
                    "rational source identity, subset sums on both sides")
            .sizes(5, 8)
            .shapes(all_pairs)
            .both([a, b](auto& s, const Shape& sh) {
                auto rp = sample_rational(s, sh.n, sh.m);
                return sides(rational_source(rp, a), rational_source(rp, b));
            })
            .into(out);

        CaseBuilder(std::string("trig_") + sd, "trigonometricKajihara", "trig", "source",
                    "trigonometric source identity, subset sums on both sides")
            .sizes(5, 8)
            .shapes(all_pairs)
            .both([a, b](auto& s, const Shape& sh) {
                auto tp = sample_trig(s, sh.n, sh.m);
                return sides(trig_source(tp, a), trig_source(tp, b));
            })
            .into(out);

        CaseBuilder(std::string("elliptic_") + sd, "ellipticKajiharaNoumi", "elliptic", "source",
                    "elliptic source identity, theta truncation 1e-14")
            .sizes(4, 6)
            .shapes([](int N) { return square(0, N); })
            .complex_only([a, b](Sampler<Complex>& s, const Shape& sh) {
                auto e = sample_elliptic(s, sh.n);
                return sides(elliptic_source(e, a), elliptic_source(e, b));
            })
            .into(out);
    }

    for (Side side : {Side::F, Side::G}) {
        const std::string sn = to_string(side);
        CaseBuilder("rational_diffop_" + sn, "rationalKajihara", "rational", "source",
                    "difference-operator expansion against the subset sum")
            .sizes(4, 6)
            .shapes(all_pairs)
            .both([side](auto& s, const Shape& sh) {
                auto rp = sample_rational(s, sh.n, sh.m);
                return sides(rational_source_via_difference_ops(rp, side), rational_source(rp, side));
            })
            .into(out);
        CaseBuilder("trig_diffop_" + sn, "trigonometricKajihara", "trig", "source",
                    "difference-operator expansion against the subset sum")
            .sizes(4, 6)
            .shapes(all_pairs)
            .both([side](auto& s, const Shape& sh) {
                auto tp = sample_trig(s, sh.n, sh.m);
                return sides(trig_source_via_difference_ops(tp, side), trig_source(tp, side));
            })
            .into(out);
        CaseBuilder("elliptic_diffop_" + sn, "ellipticKajiharaNoumi", "elliptic", "source",
                    "difference-operator expansion against the subset sum")
            .sizes(4, 5)
            .shapes([](int N) { return square(0, N); })
            .complex_only([side](Sampler<Complex>& s, const Shape& sh) {
                auto e = sample_elliptic(s, sh.n);
                return sides(elliptic_source_via_difference_ops(e, side), elliptic_source(e, side));
            })
            .into(out);
    }

    CaseBuilder("trig_n_gt_m_reduction", "trigonometricKajihara", "trig", "source",
                "n > m identity from the n < m one under u -> 1/v, v -> 1/u, z -> q^{m-n} z")
        .sizes(5, 8)
        .shapes([](int N) {
            std::vector<Shape> v;
            for (const Shape& sh : pairs(0, N))
                if (sh.n > sh.m) v.push_back(sh);
            return v;
        })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            auto tp = sample_trig(s, sh.n, sh.m);
            const auto inv = inverted(tp);
            protect_trig(s, inv);
            const long d = static_cast<long>(sh.m) - static_cast<long>(sh.n);
            // F of the swapped problem is the bare G-sum of the original, and vice versa.
            const T f_inv = trig_source(inv, Side::F);
            const T g_inv = trig_source(inv, Side::G);
            const T g_sum = trig_source(tp, Side::G) / qpoch_n(tp.z, tp.q, d);
            const T f_orig = trig_source(tp, Side::F);
            return worse(compare(f_inv, g_sum), compare(g_inv, qpoch_n(inv.z, tp.q, -d) * f_orig));
        })
        .into(out);

    // ---------------------------------------------------------------- limits

    CaseBuilder("deg_extended_trig", "extendedtrigonometricsource", "trig", "degeneration",
                "extended trigonometric identity with lambda, n >= m")
        .sizes(5, 7)
        .shapes([](int N) { return ordered(0, N, false); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.m, true);
            return compare(extended_trig_lhs(tp), trig_lambda_source(tp, Side::G));
        })
        .into(out);

    CaseBuilder("deg_lambda_zero", "lambdazero", "trig", "degeneration",
                "lambda = 0 reduction with the finite product prefactor")
        .sizes(5, 7)
        .shapes([](int N) { return ordered(0, N, false); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            auto tp = sample_trig(s, sh.n, sh.m, true);
            tp.lambda = from_int<T>(0);
            const long d = sh.n - sh.m;
            TrigParams<T> shifted = tp;
            shifted.z = ipow(tp.q, d) * tp.z;
            T pre = from_int<T>(1);
            for (long j = 1; j <= d; ++j) pre *= from_int<T>(1) - ipow(tp.q, j - 1) * tp.z;
            return compare(pre * trig_lambda_source(shifted, Side::F), trig_lambda_source(tp, Side::G));
        })
        .into(out);

    CaseBuilder("deg_elliptic_to_trig", "limitofellipticsource", "elliptic", "degeneration",
                "elliptic F and G at p = 1e-6 against the lambda-weighted trigonometric sums")
        .sizes(4, 5)
        .tol(1e-4, true)
        .shapes([](int N) { return square(0, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.n, true);
            EllipticParams<Complex> e;
            e.p = Complex(1e-6, 0.0);
            e.q = tp.q;
            e.z = tp.z;
            e.u = tp.u;
            e.v = tp.v;
            e.lambda = *tp.lambda * product(tp.v) / product(tp.u);
            protect_elliptic(s, e);
            return worse(compare(elliptic_source(e, Side::F), trig_lambda_source(tp, Side::F)),
                         compare(elliptic_source(e, Side::G), trig_lambda_source(tp, Side::G)));
        })
        .into(out);

    CaseBuilder("deg_elliptic_to_trig_rate", "limitofellipticsource", "elliptic", "degeneration",
                "elliptic-to-trig gap at p = 1e-6 against 10x the gap at p = 1e-7 (first order in p)")
        .sizes(4, 5)
        .tol(0.01, true)
        .shapes([](int N) { return square(1, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto tp = sample_trig(s, sh.n, sh.n, true);
            auto gap = [&](double p) {
                EllipticParams<Complex> e{Complex(p, 0.0), tp.q, *tp.lambda * product(tp.v) / product(tp.u),
                                          tp.z, tp.u, tp.v};
                protect_elliptic(s, e);
                return std::max(relative_residual(elliptic_source(e, Side::F), trig_lambda_source(tp, Side::F)),
                                relative_residual(elliptic_source(e, Side::G), trig_lambda_source(tp, Side::G)));
            };
            const double r1 = gap(1e-6), r2 = gap(1e-7);
            if (r1 < 1e-12) throw SingularError("gap below resolution");
            return Evaluation<Complex>{Complex(r1, 0.0), Complex(10.0 * r2, 0.0), std::abs(r1 / (10.0 * r2) - 1.0)};
        })
        .into(out);

    CaseBuilder("deg_trig_to_rational", "rationalKajihara", "rational", "degeneration",
                "trig F at u = e^{eps x}, v = e^{eps y}, q = e^{2 eps c'} against rational F at c = 2c', eps = 1e-4")
        .sizes(4, 5)
        .tol(1e-3, true)
        .shapes(all_pairs)
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            const Complex c_half = rp.c / 2.0;
            TrigParams<Complex> tp;
            tp.q = std::exp(2e-4 * c_half);
            tp.z = rp.z;
            for (const Complex& x : rp.u) tp.u.push_back(std::exp(1e-4 * x));
            for (const Complex& y : rp.v) tp.v.push_back(std::exp(1e-4 * y));
            return compare(trig_source(tp, Side::F), rational_source(rp, Side::F));
        })
        .into(out);

    // eps-halving check for the trig -> rational limit. At m = n + 1 the
    // first-order term cancels identically; the gap is then O(eps^2) and sits
    // near roundoff at eps = 1e-4, so that shape is checked at coarser eps.
    auto rate_case = [&](const std::string& id, const std::string& desc, bool balanced, double eps, double factor) {
        CaseBuilder(id, "rationalKajihara", "rational", "degeneration", desc)
            .sizes(4, 5)
            .tol(0.01, true)
            .shapes([balanced](int N) {
                std::vector<Shape> v;
                for (const Shape& sh : pairs(0, N))
                    if (sh.n > 0 && sh.m > 0 && (sh.m == sh.n + 1) == balanced) v.push_back(sh);
                return v;
            })
            .complex_only([eps, factor](Sampler<Complex>& s, const Shape& sh) {
                auto rp = sample_rational(s, sh.n, sh.m);
                const Complex c_half = rp.c / 2.0;
                const double r1 = trig_to_rational_gap(eps, rp.u, rp.v, c_half, rp.z);
                const double r2 = trig_to_rational_gap(eps / 2.0, rp.u, rp.v, c_half, rp.z);
                // a draw whose leading term nearly cancels says nothing about the rate
                if (r1 < 1e-12) throw SingularError("gap below resolution");
                return Evaluation<Complex>{Complex(r1, 0.0), Complex(factor * r2, 0.0),
                                           std::abs(r1 / (factor * r2) - 1.0)};
            })
            .into(out);
    };
    rate_case("deg_trig_to_rational_rate", "trig-to-rational gap at eps = 1e-4 against twice the gap at 5e-5", false,
              1e-4, 2.0);
    rate_case("deg_trig_to_rational_rate_balanced",
              "m = n + 1: gap at eps = 1e-2 against four times the gap at 5e-3 (second order)", true, 1e-2, 4.0);

    // ----------------------------------------------------------- q-identities

    CaseBuilder("qid_qbinomial", "qbinomial", "trig", "q_identity",
                "q-binomial theorem sum_l z^l q^{l(l+1)/2} [n,l]_q = prod (1 + q^j z)")
        .sizes(7, 10)
        .points(10)
        .shapes([](int N) { return square(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T q = s.base();
            const T z = s.generic();
            T lhs = from_int<T>(0), rhs = from_int<T>(1);
            for (long l = 0; l <= sh.n; ++l) lhs += ipow(z, l) * ipow(q, l * (l + 1) / 2) * q_binomial(sh.n, l, q);
            for (long j = 1; j <= sh.n; ++j) rhs *= from_int<T>(1) + ipow(q, j) * z;
            return compare(lhs, rhs);
        })
        .into(out);

    CaseBuilder("qid_cross_ratio", "oneqidentity", "trig", "q_identity",
                "sum over |K| = l of prod (u_i - u_j/q)/(u_i - u_j) = [n,l]_{1/q}")
        .sizes(7, 10)
        .points(10)
        .shapes([](int N) { return with_subsets(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T q = s.base();
            const auto u = s.generic_vector(sh.n);
            SubsetTerms<T> t;
            t.size = sh.n;
            t.weight.assign(sh.n + 1, from_int<T>(1));
            t.pair.assign(sh.n * sh.n, from_int<T>(1));
            t.inside.assign(sh.n, from_int<T>(1));
            for (int i = 0; i < sh.n; ++i)
                for (int j = 0; j < sh.n; ++j)
                    if (i != j) {
                        s.protect(u[i] - u[j]);
                        t.pair[i * sh.n + j] = (u[i] - u[j] / q) / (u[i] - u[j]);
                    }
            return compare(subset_sum_fixed(t, sh.k), q_binomial(sh.n, sh.k, from_int<T>(1) / q));
        })
        .into(out);

    CaseBuilder("qid_inversions", "qbinomialidentity", "trig", "q_identity",
                "sum over |K| = l of q^{-#{i in K, j not in K, i > j}} = [n,l]_{1/q}")
        .sizes(7, 10)
        .points(10)
        .shapes([](int N) { return with_subsets(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T q = s.base();
            const T qi = from_int<T>(1) / q;
            T lhs = from_int<T>(0);
            for (std::uint32_t mask = 0; mask < (1u << sh.n); ++mask) {
                if (std::popcount(mask) != sh.k) continue;
                long inv = 0;
                for (int i = 0; i < sh.n; ++i)
                    for (int j = 0; j < i; ++j)
                        if ((mask >> i & 1u) && !(mask >> j & 1u)) ++inv;
                lhs += ipow(qi, inv);
            }
            return compare(lhs, q_binomial(sh.n, sh.k, qi));
        })
        .into(out);

    CaseBuilder("qid_rational_binomial", "PQspecializations", "rational", "q_identity",
                "sum over |K| = l of prod (u_i - u_j + c)/(u_i - u_j) = C(n, l)")
        .sizes(7, 10)
        .points(10)
        .shapes([](int N) { return with_subsets(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T c = s.generic();
            const auto u = s.generic_vector(sh.n);
            SubsetTerms<T> t;
            t.size = sh.n;
            t.weight.assign(sh.n + 1, from_int<T>(1));
            t.pair.assign(sh.n * sh.n, from_int<T>(1));
            t.inside.assign(sh.n, from_int<T>(1));
            for (int i = 0; i < sh.n; ++i)
                for (int j = 0; j < sh.n; ++j)
                    if (i != j) {
                        s.protect(u[i] - u[j]);
                        t.pair[i * sh.n + j] = (u[i] - u[j] + c) / (u[i] - u[j]);
                    }
            return compare(subset_sum_fixed(t, sh.k), from_int<T>(binomial(sh.n, sh.k)));
        })
        .into(out);
}

}  // namespace srcid
