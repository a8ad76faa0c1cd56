#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "srcid/engine.hpp"
#include "srcid/source.hpp"

using namespace srcid;
using testing::Q;

namespace {

RationalParams<Rational> rational_point(testing::RationalSource& src, int n, int m) {
    const auto all = src.distinct(n + m);
    RationalParams<Rational> rp{src.next(), src.next(), {all.begin(), all.begin() + n}, {all.begin() + n, all.end()}};
    return rp;
}

// Lagrange value at x of the polynomial through (xs, ys).
Rational lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational term = ys[i];
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) term *= (x - xs[j]) / (xs[i] - xs[j]);
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_SUITE("source_functions") {

TEST_CASE("subset sums with trivial data") {
    SubsetTerms<Rational> t;
    t.size = 0;
    t.weight = {Q(3)};
    CHECK(subset_sum(t) == Q(3));

    t.size = 2;
    t.weight = {Q(1), Q(1), Q(1)};
    t.pair.assign(4, Q(1));
    t.inside = {Q(2), Q(5)};
    // (1 + 2)(1 + 5)
    CHECK(subset_sum(t) == Q(18));
    CHECK(subset_sum_fixed(t, 1) == Q(7));
    CHECK(subset_sum_fixed(t, 2) == Q(10));
}

TEST_CASE("trig F at z = 0 is 1") {
    testing::RationalSource src(1);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            const auto all = src.distinct(n + m);
            TrigParams<Rational> tp{Q(3), Q(0), {all.begin(), all.begin() + n}, {all.begin() + n, all.end()}, {}};
            CHECK(trig_source(tp, Side::F) == Q(1));
        }
}

TEST_CASE("rational two-term sums") {
    RationalParams<Rational> rp{Q(1), Q(1), {Q(0)}, {Q(2)}};
    CHECK(rational_source(rp, Side::F) == Q(-1));
    CHECK(rational_source(rp, Side::G) == Q(-1));
    testing::RationalSource src(2);
    for (int i = 0; i < 10; ++i) {
        RationalParams<Rational> r{src.next(), Q(1), {src.next()}, {src.next()}};
        CHECK(rational_source(r, Side::P) == -r.c);
    }
}

TEST_CASE("empty-index conventions") {
    TrigParams<Rational> tp{Q(2), Q(5), {}, {}, {}};
    CHECK(trig_source(tp, Side::F) == Q(1));
    CHECK(trig_source(tp, Side::G) == Q(1));
    RationalParams<Rational> rp{Q(2), Q(5), {}, {}};
    CHECK(rational_source(rp, Side::F) == Q(1));
    CHECK(rational_source(rp, Side::G) == Q(1));
    EllipticParams<Complex> e{Complex(0.3), Complex(0.5, 0.2), Complex(0.7, 0.1), Complex(1.5), {}, {}};
    CHECK(testing::near(elliptic_source(e, Side::P), theta(e.lambda, e.p), 1e-14));
    CHECK(testing::near(elliptic_source(e, Side::Q), theta(e.lambda, e.p), 1e-14));
}

TEST_CASE("elliptic identity at n = 2") {
    testing::ComplexSource src(3);
    for (int trial = 0; trial < 10; ++trial) {
        EllipticParams<Complex> e{Complex(0.3), src.next(), src.next(), src.next(), src.vec(2), src.vec(2)};
        CHECK(testing::near(elliptic_source(e, Side::F), elliptic_source(e, Side::G), 1e-8));
    }
}

TEST_CASE("cleared forms carry the clearing factor") {
    testing::RationalSource src(4);
    const auto rp = rational_point(src, 3, 2);
    Rational clear(1);
    for (const auto& v : rp.v)
        for (const auto& u : rp.u) clear *= v - u - rp.c;
    CHECK(rational_source(rp, Side::P) == clear * rational_source(rp, Side::F));

    const auto all = src.distinct(5);
    TrigParams<Rational> tp{Q(101, 97), src.next(), {all.begin(), all.begin() + 2}, {all.begin() + 2, all.end()}, {}};
    Rational tclear(1);
    for (const auto& v : tp.v)
        for (const auto& u : tp.u) tclear *= v - tp.q * u;
    CHECK(trig_source(tp, Side::P) == tclear * trig_source(tp, Side::F));
}

TEST_CASE("trig P vanishes at v_1 = u_1, v_2 = q u_1") {
    testing::RationalSource src(5);
    for (int n = 2; n <= 4; ++n) {
        const auto all = src.distinct(n + 1);
        const Rational q = Q(5, 3);
        TrigParams<Rational> tp{q, src.next(), {all.begin(), all.begin() + n}, {}, {}};
        tp.v = {tp.u[0], q * tp.u[0], all[n]};
        CHECK(trig_source(tp, Side::P) == Q(0));
        CHECK(trig_source(tp, Side::Q) == Q(0));
    }
}

TEST_CASE("source identities on exact points") {
    testing::RationalSource src(6);
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            auto rp = rational_point(src, n, m);
            if (n > m && rp.z == Q(1)) rp.z = Q(2);
            CHECK(rational_source(rp, Side::F) == rational_source(rp, Side::G));
            CHECK(rational_source(rp, Side::P) == rational_source(rp, Side::Q));
            const auto all = src.distinct(n + m);
            TrigParams<Rational> tp{Q(-7, 3), src.next(), {all.begin(), all.begin() + n}, {all.begin() + n, all.end()}, {}};
            CHECK(trig_source(tp, Side::F) == trig_source(tp, Side::G));
        }
}

TEST_CASE("rational G needs z != 1 when n > m") {
    RationalParams<Rational> rp{Q(1), Q(1), {Q(2), Q(3)}, {Q(5)}};
    CHECK_THROWS_AS(rational_source(rp, Side::G), SingularError);
}

TEST_CASE("size cap") {
    std::vector<Rational> big;
    for (int i = 1; i <= 13; ++i) big.push_back(Q(i));
    TrigParams<Rational> tp{Q(2), Q(3), {}, big, {}};
    CHECK_THROWS_AS(trig_source(tp, Side::F), SizeError);
}

TEST_CASE("apply_difference_product") {
    const PointFunction<Rational> f = [](const std::vector<Rational>& x) { return x[0] * x[0] + x[1]; };
    const Shift<Rational> add{ShiftKind::Additive, Q(1), ShiftDirection::Forward};
    const std::vector<Rational> pt = {Q(2), Q(3)};
    CHECK(apply_difference_product(f, {}, add, Q(5), pt) == Q(7));
    CHECK(apply_difference_product(f, {0, 1}, add, Q(0), pt) == Q(7));
    // (1 - z T_0) f = f(2,3) - z f(3,3)
    CHECK(apply_difference_product(f, {0}, add, Q(2), pt) == Q(7) - Q(2) * Q(12));
    const Shift<Rational> mul{ShiftKind::Multiplicative, Q(2), ShiftDirection::Inverse};
    CHECK(apply_difference_product(f, {0}, mul, Q(1), pt) == Q(7) - Q(4));
}

TEST_CASE("rational F through additive difference operators") {
    testing::RationalSource src(7);
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            const auto rp = rational_point(src, n, m);
            const PointFunction<Rational> f = [n](const std::vector<Rational>& x) {
                const std::size_t nn = static_cast<std::size_t>(n);
                Rational num(1), den(1);
                for (std::size_t i = nn; i < x.size(); ++i)
                    for (std::size_t j = i + 1; j < x.size(); ++j) num *= x[j] - x[i];
                for (std::size_t i = nn; i < x.size(); ++i)
                    for (std::size_t k = 0; k < nn; ++k) den *= x[i] - x[k];
                return num / den;
            };
            std::vector<Rational> pt = rp.u;
            pt.insert(pt.end(), rp.v.begin(), rp.v.end());
            std::vector<std::size_t> vars(m);
            std::iota(vars.begin(), vars.end(), static_cast<std::size_t>(n));
            const Shift<Rational> shift{ShiftKind::Additive, rp.c, ShiftDirection::Inverse};
            const Rational via = apply_difference_product(f, vars, shift, rp.z, pt) / f(pt);
            CHECK(via == rational_source(rp, Side::F));
            CHECK(rational_source_via_difference_ops(rp, Side::F) == rational_source(rp, Side::F));
            auto rg = rp;
            if (n > m && rg.z == Q(1)) rg.z = Q(3);
            CHECK(rational_source_via_difference_ops(rg, Side::G) == rational_source(rg, Side::G));
        }
}

TEST_CASE("trig and elliptic difference-operator forms") {
    testing::RationalSource src(8);
    const auto all = src.distinct(5);
    TrigParams<Rational> tp{Q(3, 2), src.next(), {all.begin(), all.begin() + 3}, {all.begin() + 3, all.end()}, {}};
    CHECK(trig_source_via_difference_ops(tp, Side::F) == trig_source(tp, Side::F));
    CHECK(trig_source_via_difference_ops(tp, Side::G) == trig_source(tp, Side::G));

    TrigParams<Complex> tc{Complex(0.6, 0.3), Complex(0.4, 0.9), {Complex(1.1, 0.2), Complex(-0.4, 0.8), Complex(0.3, -1.2)},
                           {Complex(0.9, 0.9), Complex(-1.3, 0.1)}, {}};
    CHECK(testing::near(trig_source_via_difference_ops(tc, Side::G), trig_source(tc, Side::G), 1e-10));

    testing::ComplexSource csrc(9);
    EllipticParams<Complex> e{Complex(0.3), csrc.next(), csrc.next(), csrc.next(), csrc.vec(2), csrc.vec(2)};
    CHECK(testing::near(elliptic_source_via_difference_ops(e, Side::F), elliptic_source(e, Side::F), 1e-8));
    CHECK(testing::near(elliptic_source_via_difference_ops(e, Side::G), elliptic_source(e, Side::G), 1e-8));
}

TEST_CASE("P and Q are symmetric in v") {
    testing::RationalSource src(10);
    std::mt19937_64 rng(10);
    for (int n = 0; n <= 3; ++n)
        for (int m = 2; m <= 4; ++m) {
            const auto all = src.distinct(n + m);
            TrigParams<Rational> tp{Q(-5, 2), src.next(), {all.begin(), all.begin() + n}, {all.begin() + n, all.end()}, {}};
            auto rp = rational_point(src, n, m);
            if (n > m && rp.z == Q(1)) rp.z = Q(2);
            const Rational tP = trig_source(tp, Side::P), tQ = trig_source(tp, Side::Q);
            const Rational rP = rational_source(rp, Side::P), rQ = rational_source(rp, Side::Q);
            for (int k = 0; k < 10; ++k) {
                std::shuffle(tp.v.begin(), tp.v.end(), rng);
                std::shuffle(rp.v.begin(), rp.v.end(), rng);
                CHECK(trig_source(tp, Side::P) == tP);
                CHECK(trig_source(tp, Side::Q) == tQ);
                CHECK(rational_source(rp, Side::P) == rP);
                CHECK(rational_source(rp, Side::Q) == rQ);
            }
        }
}

TEST_CASE("rational P has degree at most n in v_1 when n >= m") {
    testing::RationalSource src(12);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            auto rp = rational_point(src, n, m);
            if (n > m && rp.z == Q(1)) rp.z = Q(2);
            std::vector<Rational> xs, ys;
            for (int k = 0; k < 2 * (n + 1); ++k) {
                rp.v[0] = Q(k * 7 + 3, 11);
                xs.push_back(rp.v[0]);
                ys.push_back(rational_source(rp, Side::P));
            }
            const std::vector<Rational> fx(xs.begin(), xs.begin() + n + 1), fy(ys.begin(), ys.begin() + n + 1);
            for (std::size_t k = n + 1; k < xs.size(); ++k) CHECK(lagrange(fx, fy, xs[k]) == ys[k]);
        }
}

}
