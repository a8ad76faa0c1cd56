#include "case_util.hpp"
#include "srcid/det_rep.hpp"
#include "srcid/matrix.hpp"
#include "srcid/source.hpp"

namespace srcid {

using namespace cases;

namespace {

std::string family_anchor(Regime regime, DetFamily family) {
    switch (regime) {
        case Regime::Elliptic:
            return family == DetFamily::MPT ? "propellipticMPT" : "propellipticBS";
        case Regime::Trig:
            switch (family) {
                case DetFamily::MPT: return "proptrigMPT";
                case DetFamily::ScalarProduct: return "trigKostovFWtype";
                case DetFamily::DWBC: return "ProptrigFW";
                default: return "ProptrigBS";
            }
        default:
            switch (family) {
                case DetFamily::MPT: return "MPTone";
                case DetFamily::ScalarProduct: return "oneparameterKostov";
                case DetFamily::DWBC: return "oneparameterdefFodaWheeler";
                case DetFamily::IK: return "Pnnz=1";
                default: return "BSrepone";
            }
    }
}

std::size_t side_size(const Shape& sh, Side side) { return side == Side::F ? sh.m : sh.n; }

// Shapes on which the family is defined for this side.
std::vector<Shape> det_shapes(Regime regime, DetFamily family, Side side, int N) {
    std::vector<Shape> out;
    const auto base = regime == Regime::Elliptic ? square(0, N) : pairs(0, N);
    for (const Shape& sh : base)
        if (!family_needs_rows(family) || side_size(sh, side) > 0) out.push_back(sh);
    return out;
}

// Both aux draws against the subset sum, plus the two draws against each other.
template <Scalar T>
Evaluation<T> two_draws(const T& source, const T& d1, const T& d2) {
    return worse(worse(compare(d1, source), compare(d2, source)), compare(d1, d2));
}

// The elliptic determinant checks cancel heavily (entries far larger than the
// determinant once |p| nears 1/2 or theta arguments grow), so they run in
// long double.
ComplexLD widen(const Complex& x) { return {x.real(), x.imag()}; }
std::vector<ComplexLD> widen(const std::vector<Complex>& xs) {
    std::vector<ComplexLD> out;
    for (const Complex& x : xs) out.push_back(widen(x));
    return out;
}
Complex narrow(const ComplexLD& x) { return {static_cast<double>(x.real()), static_cast<double>(x.imag())}; }
Matrix<ComplexLD> widen(const Matrix<Complex>& m) {
    Matrix<ComplexLD> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = widen(m(i, j));
    return out;
}
EllipticParams<ComplexLD> widen(const EllipticParams<Complex>& e) {
    return {widen(e.p), widen(e.q), widen(e.lambda), widen(e.z), widen(e.u), widen(e.v)};
}
AuxParams<ComplexLD> widen(const AuxParams<Complex>& a) {
    return {widen(a.r), widen(a.p_mix), widen(a.q_mix), widen(a.delta), widen(a.eta_v), widen(a.eta_u)};
}

Truncation fine_truncation() {
    Truncation t;
    t.epsilon = 1e-18;
    return t;
}

// Subset sum and two determinant evaluations in long double.
Evaluation<Complex> elliptic_two_draws(const EllipticParams<Complex>& e, DetFamily fam, Side side,
                                       const AuxParams<Complex>& a1, const AuxParams<Complex>& a2) {
    const Truncation t = fine_truncation();
    const auto ew = widen(e);
    return two_draws(narrow(elliptic_source(ew, side, t)), narrow(det_rep(ew, fam, side, widen(a1), t)),
                     narrow(det_rep(ew, fam, side, widen(a2), t)));
}

// Row-1 parameter at which the modified first row reproduces the subset sum.
void pin_elliptic_aux(const EllipticParams<Complex>& e, DetFamily family, Side side, AuxParams<Complex>& aux) {
    if (family == DetFamily::MPT) {
        aux.r = side == Side::F ? e.lambda * product(e.u) : e.lambda / product(e.v);
    } else {
        aux.delta = side == Side::F ? e.lambda * product(e.u) / product(aux.eta_v)
                                    : e.lambda * product(aux.eta_u) / product(e.v);
    }
}

}  // namespace

void register_det_cases(std::vector<CaseDef>& out) {
    const DetFamily families[] = {DetFamily::MPT, DetFamily::ScalarProduct, DetFamily::DWBC, DetFamily::BS,
                                  DetFamily::BSLimit};
    for (Side side : {Side::F, Side::G}) {
        const std::string sn = to_string(side);
        for (DetFamily fam : families) {
            const std::string fn = to_string(fam);
            if (family_available(Regime::Elliptic, fam)) {
                CaseBuilder("det_elliptic_" + fn + "_" + sn, family_anchor(Regime::Elliptic, fam), "elliptic",
                            "determinant", "determinant form against the subset sum, two aux draws")
                    .sizes(4, 5)
                    .points(10)
                    .shapes([fam, side](int N) { return det_shapes(Regime::Elliptic, fam, side, N); })
                    .complex_only([fam, side](Sampler<Complex>& s, const Shape& sh) {
                        auto e = sample_elliptic(s, sh.n);
                        const auto a1 = sample_aux(s, sh.n, sh.m);
                        const auto a2 = sample_aux(s, sh.n, sh.m);
                        return elliptic_two_draws(e, fam, side, a1, a2);
                    })
                    .into(out);

                CaseBuilder("det_elliptic_" + fn + "_" + sn + "_pinned", family_anchor(Regime::Elliptic, fam),
                            "elliptic", "determinant",
                            "determinant form with the row-1 parameter tied to lambda, other aux random")
                    .sizes(4, 5)
                    .points(10)
                    .shapes([fam, side](int N) { return det_shapes(Regime::Elliptic, fam, side, N); })
                    .complex_only([fam, side](Sampler<Complex>& s, const Shape& sh) {
                        auto e = sample_elliptic(s, sh.n);
                        auto a1 = sample_aux(s, sh.n, sh.m);
                        auto a2 = sample_aux(s, sh.n, sh.m);
                        pin_elliptic_aux(e, fam, side, a1);
                        pin_elliptic_aux(e, fam, side, a2);
                        return elliptic_two_draws(e, fam, side, a1, a2);
                    })
                    .into(out);
            }

            CaseBuilder("det_trig_" + fn + "_" + sn, family_anchor(Regime::Trig, fam), "trig", "determinant",
                        "determinant form against the subset sum, two aux draws")
                .sizes(4, 6)
                .points(10)
                .shapes([fam, side](int N) { return det_shapes(Regime::Trig, fam, side, N); })
                .both([fam, side](auto& s, const Shape& sh) {
                    auto tp = sample_trig(s, sh.n, sh.m);
                    const auto a1 = sample_aux(s, sh.n, sh.m);
                    const auto a2 = sample_aux(s, sh.n, sh.m);
                    return two_draws(trig_source(tp, side), det_rep(tp, fam, side, a1), det_rep(tp, fam, side, a2));
                })
                .into(out);

            CaseBuilder("det_rational_" + fn + "_" + sn, family_anchor(Regime::Rational, fam), "rational",
                        "determinant", "determinant form against the subset sum, two aux draws")
                .sizes(4, 6)
                .points(10)
                .shapes([fam, side](int N) { return det_shapes(Regime::Rational, fam, side, N); })
                .both([fam, side](auto& s, const Shape& sh) {
                    auto rp = sample_rational(s, sh.n, sh.m);
                    const auto a1 = sample_aux(s, sh.n, sh.m);
                    const auto a2 = sample_aux(s, sh.n, sh.m);
                    return two_draws(rational_source(rp, side), det_rep(rp, fam, side, a1),
                                     det_rep(rp, fam, side, a2));
                })
                .into(out);
        }

        // r = 0 removes the row-1 modification of the MPT form.
        CaseBuilder("det_trig_MPT_" + sn + "_r0", "proptrigMPT", "trig", "determinant",
                    "MPT form at r = 0 with random mixing matrices")
            .sizes(4, 6)
            .points(10)
            .shapes([side](int N) { return det_shapes(Regime::Trig, DetFamily::MPT, side, N); })
            .both([side](auto& s, const Shape& sh) {
                using T = field_of<decltype(s)>;
                auto tp = sample_trig(s, sh.n, sh.m);
                auto a1 = sample_aux(s, sh.n, sh.m);
                auto a2 = sample_aux(s, sh.n, sh.m);
                a1.r = a2.r = from_int<T>(0);
                return two_draws(trig_source(tp, side), det_rep(tp, DetFamily::MPT, side, a1),
                                 det_rep(tp, DetFamily::MPT, side, a2));
            })
            .into(out);
        CaseBuilder("det_rational_MPT_" + sn + "_r0", "MPTone", "rational", "determinant",
                    "MPT form at r = 0 with random mixing matrices")
            .sizes(4, 6)
            .points(10)
            .shapes([side](int N) { return det_shapes(Regime::Rational, DetFamily::MPT, side, N); })
            .both([side](auto& s, const Shape& sh) {
                using T = field_of<decltype(s)>;
                auto rp = sample_rational(s, sh.n, sh.m);
                auto a1 = sample_aux(s, sh.n, sh.m);
                auto a2 = sample_aux(s, sh.n, sh.m);
                a1.r = a2.r = from_int<T>(0);
                return two_draws(rational_source(rp, side), det_rep(rp, DetFamily::MPT, side, a1),
                                 det_rep(rp, DetFamily::MPT, side, a2));
            })
            .into(out);

        CaseBuilder("bs_large_delta_trig_" + sn, "ProptrigBS", "trig", "determinant",
                    "BS form at delta = 1e6 against the delta -> infinity form")
            .sizes(4, 6)
            .points(10)
            .tol(1e-3, true)
            .shapes([side](int N) { return det_shapes(Regime::Trig, DetFamily::BS, side, N); })
            .complex_only([side](Sampler<Complex>& s, const Shape& sh) {
                auto tp = sample_trig(s, sh.n, sh.m);
                auto aux = sample_aux(s, sh.n, sh.m);
                aux.delta = Complex(1e6, 0.0);
                return compare(det_rep(tp, DetFamily::BS, side, aux), det_rep(tp, DetFamily::BSLimit, side, aux));
            })
            .into(out);
        CaseBuilder("bs_large_delta_rational_" + sn, "BSrepone", "rational", "determinant",
                    "BS form at delta = 1e6 against the delta -> infinity form")
            .sizes(4, 6)
            .points(10)
            .tol(1e-3, true)
            .shapes([side](int N) { return det_shapes(Regime::Rational, DetFamily::BS, side, N); })
            .complex_only([side](Sampler<Complex>& s, const Shape& sh) {
                auto rp = sample_rational(s, sh.n, sh.m);
                auto aux = sample_aux(s, sh.n, sh.m);
                aux.delta = Complex(1e6, 0.0);
                return compare(det_rep(rp, DetFamily::BS, side, aux), det_rep(rp, DetFamily::BSLimit, side, aux));
            })
            .into(out);
    }

    CaseBuilder("det_identity_elliptic_MPT", "ellipticMPTlhs,ellipticMPTrhs", "elliptic", "determinant",
                "elliptic MPT F expression against the MPT G expression, same aux")
        .sizes(4, 5)
        .shapes([](int N) { return square(1, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            auto e = sample_elliptic(s, sh.n);
            const auto aux = sample_aux(s, sh.n, sh.n);
            const Truncation t = fine_truncation();
            const auto ew = widen(e);
            const auto aw = widen(aux);
            return compare(narrow(det_rep(ew, DetFamily::MPT, Side::F, aw, t)),
                           narrow(det_rep(ew, DetFamily::MPT, Side::G, aw, t)));
        })
        .into(out);

    CaseBuilder("ik_equals_P", "Pnnz=1", "rational", "determinant",
                "Gaudin-Izergin-Korepin determinant against P_{n,n} at z = 1")
        .sizes(5, 7)
        .shapes([](int N) { return square(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            auto rp = sample_rational(s, sh.n, sh.n);
            rp.z = from_int<T>(1);
            for (const T& u : rp.u)
                for (const T& v : rp.v) {
                    s.protect(u - v);
                    s.protect(v - u + rp.c);
                }
            return compare(izergin_korepin(rp.u, rp.v, rp.c), rational_source(rp, Side::P));
        })
        .into(out);

    // ------------------------------------------------------ closed forms

    CaseBuilder("det_frobenius", "Frobenius", "elliptic", "determinant",
                "Frobenius determinant against its factorized value, evaluated in long double")
        .sizes(5, 6)
        .tol(1e-9)
        .shapes([](int N) { return square(0, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            const Complex p = s.nome();
            const Complex lam = s.generic();
            const auto u = s.generic_vector(sh.n);
            const auto v = s.generic_vector(sh.n);
            s.protect(theta(lam, p));
            for (const auto& a : u)
                for (const auto& b : v) s.protect(theta(a / b, p));
            Truncation trunc;
            trunc.epsilon = 1e-18;
            const auto uw = widen(u), vw = widen(v);
            const ComplexLD pw = widen(p), lw = widen(lam);
            return compare(narrow(det(frobenius_matrix(uw, vw, lw, pw, trunc))),
                           narrow(frobenius_closed(uw, vw, lw, pw, trunc)));
        })
        .into(out);

    CaseBuilder("det_trig_frobenius", "trigFrob", "trig", "determinant",
                "p = 0 Frobenius determinant against its factorized value")
        .sizes(5, 7)
        .shapes([](int N) { return square(0, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T p = from_int<T>(0);
            const T lam = s.generic();
            const auto u = s.generic_vector(sh.n);
            const auto v = s.generic_vector(sh.n);
            s.protect(from_int<T>(1) - lam);
            for (const auto& a : u)
                for (const auto& b : v) s.protect(b - a);
            return compare(det(frobenius_matrix(u, v, lam, p)), frobenius_closed(u, v, lam, p));
        })
        .into(out);

    CaseBuilder("det_elliptic_vandermonde", "ellipticvandermonde", "elliptic", "determinant",
                "det psi_j(u_k) against its factorized value, evaluated in long double")
        .sizes(5, 6)
        .tol(1e-9)
        .shapes([](int N) { return square(1, N); })
        .complex_only([](Sampler<Complex>& s, const Shape& sh) {
            const Complex p = s.nome();
            const Complex r = s.generic();
            const auto u = s.generic_vector(sh.n);
            Truncation trunc;
            trunc.epsilon = 1e-18;
            const auto pair = elliptic_vandermonde_check(widen(u), widen(p), widen(r), trunc);
            return compare(narrow(pair.lhs), narrow(pair.rhs));
        })
        .into(out);

    CaseBuilder("det_trig_vandermonde", "trigvandermonde", "trig", "determinant",
                "p = 0 version of the elliptic Vandermonde evaluation")
        .sizes(5, 7)
        .shapes([](int N) { return square(1, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const T r = s.generic();
            const auto u = s.generic_vector(sh.n);
            const auto pair = elliptic_vandermonde_check(u, from_int<T>(0), r);
            return compare(pair.lhs, pair.rhs);
        })
        .into(out);

    CaseBuilder("det_cauchy_vandermonde", "ProptrigFW", "trig", "determinant",
                "mixed Cauchy / monomial determinant against its factorized value, n >= m")
        .sizes(5, 7)
        .shapes([](int N) { return ordered(0, N, false); })
        .both([](auto& s, const Shape& sh) {
            const auto u = s.generic_vector(sh.n);
            const auto v = s.generic_vector(sh.m);
            for (const auto& a : u)
                for (const auto& b : v) s.protect(b - a);
            return compare(det(cauchy_vandermonde_matrix(u, v)), cauchy_vandermonde_closed(u, v));
        })
        .into(out);
}

}  // namespace srcid
