#include <array>
#include <map>

#include "case_util.hpp"
#include "srcid/source.hpp"
#include "srcid/symmetrization.hpp"
#include "srcid/wall_crossing.hpp"

namespace srcid {

using namespace cases;

namespace {

template <Scalar T>
UniPoly<T> random_poly(Sampler<T>& s, int max_degree) {
    std::vector<T> coeffs;
    const long deg = s.integer(0, max_degree);
    for (long k = 0; k <= deg; ++k) coeffs.push_back(s.generic());
    return UniPoly<T>(std::move(coeffs));
}

template <Scalar T>
struct LascouxPoint {
    std::vector<T> u, v;
    T c;
};

template <Scalar T>
LascouxPoint<T> sample_lascoux(Sampler<T>& s, int n) {
    LascouxPoint<T> p{s.generic_vector(n), s.generic_vector(n), s.generic()};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            s.protect(p.u[i] - p.u[j]);
            s.protect(p.v[i] - p.v[j]);
        }
        for (int k = 0; k < n; ++k) {
            s.protect(p.u[i] - p.v[k]);
            s.protect(p.u[i] - p.v[k] - p.c);
            s.protect(p.u[i] - p.v[k] + p.c);
        }
    }
    return p;
}

template <Scalar T>
Evaluation<T> pair_eval(const SymPair<T>& p) {
    return compare(p.lhs, p.rhs);
}

template <Scalar T>
Evaluation<T> pair_eval(const WallPair<T>& p) {
    return compare(p.lhs, p.rhs);
}

// The printed n = 2 polynomial -c(c^2 + c u1 + c u2 - c v1 - c v2 - u1 v1 - u2 v1 - u1 v2
// - u2 v2 + 2 u1 u2 + 2 v1 v2), exponents ordered (c, u1, u2, v1, v2).
using Exponent = std::array<int, 5>;

const std::map<Exponent, long>& printed_n2_polynomial() {
    static const std::map<Exponent, long> poly = {
        {{3, 0, 0, 0, 0}, -1}, {{2, 1, 0, 0, 0}, -1}, {{2, 0, 1, 0, 0}, -1}, {{2, 0, 0, 1, 0}, 1},
        {{2, 0, 0, 0, 1}, 1},  {{1, 1, 0, 1, 0}, 1},  {{1, 0, 1, 1, 0}, 1},  {{1, 1, 0, 0, 1}, 1},
        {{1, 0, 1, 0, 1}, 1},  {{1, 1, 1, 0, 0}, -2}, {{1, 0, 0, 1, 1}, -2},
    };
    return poly;
}

std::vector<Exponent> monomials_upto(int degree) {
    std::vector<Exponent> out;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            for (int c = 0; a + b + c <= degree; ++c)
                for (int d = 0; a + b + c + d <= degree; ++d)
                    for (int e = 0; a + b + c + d + e <= degree; ++e) out.push_back({a, b, c, d, e});
    return out;
}

Rational monomial(const Exponent& ex, const std::array<Rational, 5>& x) {
    Rational r(1);
    for (int i = 0; i < 5; ++i) r *= ipow(x[i], ex[i]);
    return r;
}

// Solves a x = b_q for every column b_q by Gauss-Jordan elimination; throws
// SingularError on a singular system.
template <std::size_t K>
std::array<std::vector<Rational>, K> solve(Matrix<Rational> a, std::array<std::vector<Rational>, K> b) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularError("interpolation nodes are degenerate");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            for (auto& bq : b) std::swap(bq[piv], bq[col]);
        }
        const Rational inv = Rational(1) / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
        for (auto& bq : b) bq[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (auto& bq : b) bq[r] -= f * bq[col];
        }
    }
    return b;
}

// The four n = 2 factors: (u1-u2) x coefficient of f(u1), -(u1-u2) x coefficient
// of f(u2), and both sides at f(x) = x.
std::array<Rational, 4> n2_factors(const std::array<Rational, 5>& x) {
    const Rational &c = x[0], &u1 = x[1], &u2 = x[2];
    const std::vector<Rational> u = {u1, u2}, v = {x[3], x[4]};
    const UniFunction<Rational> pick1 = [&](const Rational& t) { return (t - u2) / (u1 - u2); };
    const UniFunction<Rational> pick2 = [&](const Rational& t) { return (t - u1) / (u2 - u1); };
    const UniFunction<Rational> ident = [](const Rational& t) { return t; };
    const auto at_x = lascoux_theorem3(u, v, c, ident);
    return {(u1 - u2) * lascoux_theorem3(u, v, c, pick1).lhs, -(u1 - u2) * lascoux_theorem3(u, v, c, pick2).lhs,
            at_x.lhs, at_x.rhs};
}

Evaluation<Rational> n2_expansion(Sampler<Rational>& s) {
    const auto basis = monomials_upto(3);
    const std::size_t nb = basis.size();
    // Nodes are redrawn one at a time; 68 of them rarely all miss the poles at once.
    auto draw = [&] {
        for (int attempt = 0; attempt < kResampleCap; ++attempt) {
            std::array<Rational, 5> x;
            for (auto& xi : x) xi = Rational(s.integer(-30, 30));
            try {
                s.protect(x[1] - x[2]);
                s.protect(x[3] - x[4]);
                for (int i : {1, 2})
                    for (int k : {3, 4}) {
                        s.protect(x[i] - x[k]);
                        s.protect(x[i] - x[k] - x[0]);
                        s.protect(x[i] - x[k] + x[0]);
                    }
                return x;
            } catch (const SingularError&) {
            }
        }
        throw SingularError("no admissible interpolation node");
    };

    Matrix<Rational> a(nb, nb);
    std::array<std::vector<Rational>, 4> values;
    for (std::size_t r = 0; r < nb; ++r) {
        const auto x = draw();
        for (std::size_t j = 0; j < nb; ++j) a(r, j) = monomial(basis[j], x);
        const auto f = n2_factors(x);
        for (int q = 0; q < 4; ++q) values[q].push_back(f[q]);
    }

    const auto& printed = printed_n2_polynomial();
    Evaluation<Rational> result{Rational(0), Rational(0), 0.0};
    const auto solved = solve(std::move(a), values);
    for (const auto& coeffs : solved) {
        for (std::size_t j = 0; j < nb; ++j) {
            const auto it = printed.find(basis[j]);
            const Rational expected = it == printed.end() ? Rational(0) : Rational(it->second);
            result = worse(result, compare(coeffs[j], expected));
        }
    }
    // Held-out points against the printed polynomial itself.
    for (int t = 0; t < 12; ++t) {
        const auto x = draw();
        Rational e(0);
        for (const auto& [ex, coeff] : printed) e += Rational(coeff) * monomial(ex, x);
        for (const Rational& f : n2_factors(x)) result = worse(result, compare(f, e));
    }
    return result;
}

template <Scalar T>
T thm4_n2_closed(const LascouxPoint<T>& p) {
    const T &c = p.c, &u1 = p.u[0], &u2 = p.u[1], &v1 = p.v[0], &v2 = p.v[1];
    const T poly = c * c - c * u1 - c * u2 + c * v1 + c * v2 - u1 * v1 - u2 * v1 - u1 * v2 - u2 * v2 +
                   from_int<T>(2) * u1 * u2 + from_int<T>(2) * v1 * v2;
    return from_int<T>(2) * c * c * poly / ((u1 - v1) * (u1 - v2) * (u2 - v1) * (u2 - v2));
}

std::vector<Shape> n_range(int lo, int hi) { return square(lo, hi); }

// Shapes n <= m <= N with ell in [0, min(m, lmax)] carried in k.
std::vector<Shape> wc_shapes(int N, int lmax) {
    std::vector<Shape> out;
    for (const Shape& sh : ordered(0, N, true))
        for (int l = 0; l <= std::min(sh.m, lmax); ++l) out.push_back({sh.n, sh.m, l});
    return out;
}

template <Scalar T>
TrigParams<T> sample_wc(Sampler<T>& s, const Shape& sh) {
    return sample_trig(s, sh.n, sh.m);
}

}  // namespace

void register_symmetrization_cases(std::vector<CaseDef>& out) {
    CaseBuilder("lascoux_thm3", "rationalLascouxsymmetrization", "rational", "lascoux",
                "Sym_c with (1 - theta)^{n-1} against the determinant times the Newton divided difference")
        .sizes(6, 7)
        .points(10)
        .shapes([](int N) { return n_range(2, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            auto p = sample_lascoux(s, sh.n);
            const UniPoly<T> f = random_poly(s, 4);
            return pair_eval(lascoux_theorem3<T>(p.u, p.v, p.c, [&](const T& x) { return f(x); }));
        })
        .into(out);

    CaseBuilder("lascoux_thm3_via_source", "rationalLascoux", "rational", "lascoux",
                "Sym_c side of the first theorem against P_{n,n} at z = 1")
        .sizes(6, 7)
        .points(10)
        .shapes([](int N) { return n_range(2, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            auto p = sample_lascoux(s, sh.n);
            const UniPoly<T> f = random_poly(s, 4);
            return pair_eval(lascoux_theorem3_via_source<T>(p.u, p.v, p.c, [&](const T& x) { return f(x); }));
        })
        .into(out);

    CaseBuilder("lascoux_reduction", "reductiontoshow", "rational", "lascoux",
                "coefficient-of-f(u_1) reduction of the first theorem")
        .sizes(6, 7)
        .points(10)
        .shapes([](int N) { return n_range(1, N); })
        .both([](auto& s, const Shape& sh) {
            auto p = sample_lascoux(s, sh.n);
            return pair_eval(lascoux_reduction(p.u, p.v, p.c));
        })
        .into(out);

    CaseBuilder("lascoux_n2_expansion", "ntwoexamplelhs,ntwoexamplerhs", "rational", "lascoux",
                "n = 2 factors interpolated over all degree <= 3 monomials against the printed polynomial")
        .sizes(2, 2)
        .points(3)
        .shapes([](int) { return square(2, 2); })
        .exact_only([](Sampler<Rational>& s, const Shape&) { return n2_expansion(s); })
        .into(out);

    CaseBuilder("lascoux_thm4", "corrationallascouxexplicit", "rational", "lascoux",
                "Sym_c with (1 - tau)^n against the determinant form")
        .sizes(6, 7)
        .points(10)
        .shapes([](int N) { return n_range(1, N); })
        .both([](auto& s, const Shape& sh) {
            auto p = sample_lascoux(s, sh.n);
            return pair_eval(lascoux_theorem4(p.u, p.v, p.c));
        })
        .into(out);

    CaseBuilder("lascoux_thm4_via_source", "corrationallascoux", "rational", "lascoux",
                "second theorem against n!/prod(u_j - v_k) P_{n,n}(u | v + c) at z = 1")
        .sizes(6, 7)
        .points(10)
        .shapes([](int N) { return n_range(1, N); })
        .both([](auto& s, const Shape& sh) {
            auto p = sample_lascoux(s, sh.n);
            return pair_eval(lascoux_theorem4_via_source(p.u, p.v, p.c));
        })
        .into(out);

    CaseBuilder("lascoux_thm4_n1", "corrationallascouxexplicit", "rational", "lascoux",
                "both sides of the second theorem at n = 1 against -c/(u_1 - v_1)")
        .sizes(1, 1)
        .shapes([](int) { return square(1, 1); })
        .both([](auto& s, const Shape&) {
            auto p = sample_lascoux(s, 1);
            const auto pair = lascoux_theorem4(p.u, p.v, p.c);
            const auto expected = -p.c / (p.u[0] - p.v[0]);
            return worse(compare(pair.lhs, expected), compare(pair.rhs, expected));
        })
        .into(out);

    CaseBuilder("lascoux_thm4_n2", "checkexampleLascouxsecond", "rational", "lascoux",
                "both sides of the second theorem at n = 2 against the printed closed form")
        .sizes(2, 2)
        .shapes([](int) { return square(2, 2); })
        .both([](auto& s, const Shape&) {
            auto p = sample_lascoux(s, 2);
            const auto pair = lascoux_theorem4(p.u, p.v, p.c);
            const auto expected = thm4_n2_closed(p);
            return worse(compare(pair.lhs, expected), compare(pair.rhs, expected));
        })
        .into(out);

    CaseBuilder("divided_difference_chain", "rationalLascouxsymmetrization", "rational", "lascoux",
                "Newton table against literal nested divided differences")
        .sizes(7, 8)
        .points(10)
        .shapes([](int N) { return n_range(1, N); })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            const auto u = s.generic_vector(sh.n);
            for (int i = 0; i < sh.n; ++i)
                for (int j = i + 1; j < sh.n; ++j) s.protect(u[i] - u[j]);
            const UniPoly<T> f = random_poly(s, 12);
            const UniFunction<T> g = [&](const T& x) { return f(x); };
            return compare(newton_chain(f, u), operator_chain(g, u));
        })
        .into(out);
}

void register_wall_crossing_cases(std::vector<CaseDef>& out) {
    CaseBuilder("wc_coeff", "coeffgeomsource", "trig", "wall_crossing",
                "coefficient of (-z)^l: (+)-integral against the q-binomial expansion in (-)-integrals")
        .sizes(5, 6)
        .points(10)
        .shapes([](int N) { return wc_shapes(N, 4); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_wc(s, sh);
            return pair_eval(coeff_identity(sh.k, tp.q, tp.u, tp.v));
        })
        .into(out);

    CaseBuilder("wc_K_gamma", "gamma,equivalentcoeffgeomsource", "trig", "wall_crossing",
                "(+) - (-) against the Dec(l) sum with gamma weights")
        .sizes(5, 6)
        .points(10)
        .shapes([](int N) { return wc_shapes(N, 4); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_wc(s, sh);
            return pair_eval(wallcrossing_K(sh.k, tp.q, tp.u, tp.v));
        })
        .into(out);

    CaseBuilder("wc_K_singletons", "equivalentcoeffgeomsourcerewrite", "trig", "wall_crossing",
                "(+) - (-) against the singleton-only Dec(l) sum")
        .sizes(5, 6)
        .points(10)
        .shapes([](int N) { return wc_shapes(N, 4); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_wc(s, sh);
            return pair_eval(wallcrossing_K_singletons(sh.k, tp.q, tp.u, tp.v));
        })
        .into(out);

    CaseBuilder("wc_geometric", "geometrictrigonometricKajihara", "trig", "wall_crossing",
                "generating-series form of the trigonometric identity, n <= m")
        .sizes(5, 6)
        .points(10)
        .shapes([](int N) { return ordered(0, N, true); })
        .both([](auto& s, const Shape& sh) {
            auto tp = sample_wc(s, sh);
            return pair_eval(geometric_trig_identity(tp.q, tp.z, tp.u, tp.v));
        })
        .into(out);

    CaseBuilder("wc_rational", "beforetakingtrigtorat,source", "rational", "wall_crossing",
                "cohomological wall-crossing sum against the rational (+) and (-) coefficients")
        .sizes(5, 6)
        .points(10)
        .shapes([](int N) { return wc_shapes(N, 4); })
        .both([](auto& s, const Shape& sh) {
            auto rp = sample_rational(s, sh.n, sh.m);
            return pair_eval(wallcrossing_rational(sh.k, rp.c, rp.u, rp.v));
        })
        .into(out);

    // Hook shapes carry l in n, d in m and k in k.
    CaseBuilder("wc_hook", "qidentityforgeometricderivation", "none", "wall_crossing",
                "chain sum of symmetric q-numbers against the factorial quotient")
        .sizes(6, 8)
        .points(5)
        .shapes([](int N) {
            std::vector<Shape> v;
            for (int l = 0; l <= N; ++l)
                for (int d = 0; d <= N; ++d)
                    for (int k = 0; k <= std::min(l, d); ++k) v.push_back({l, d, k});
            return v;
        })
        .both([](auto& s, const Shape& sh) {
            using T = field_of<decltype(s)>;
            T x = s.generic();
            while (x == from_int<T>(1) || x == from_int<T>(-1)) x = s.generic();
            return pair_eval(hook_product_identity(sh.n, sh.k, sh.m, x));
        })
        .into(out);

    CaseBuilder("wc_hook_t1", "source", "none", "wall_crossing",
                "t -> 1 limit: weighted signed-statistic sum against C(d, k)")
        .sizes(6, 8)
        .points(1)
        .shapes([](int N) {
            std::vector<Shape> v;
            for (int l = 0; l <= N; ++l)
                for (int d = 0; d <= N; ++d)
                    for (int k = 0; k <= std::min(l, d); ++k) v.push_back({l, d, k});
            return v;
        })
        .exact_only([](Sampler<Rational>&, const Shape& sh) { return pair_eval(hook_product_limit(sh.n, sh.k, sh.m)); })
        .into(out);
}

}  // namespace srcid
