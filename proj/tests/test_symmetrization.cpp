#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "srcid/symmetrization.hpp"

using namespace srcid;
using testing::Q;

TEST_SUITE("symmetrization") {

TEST_CASE("divided difference") {
    const MultiFunction<Rational> sq = [](const std::vector<Rational>& u) { return u[0] * u[0]; };
    CHECK(divided_difference(sq, {Q(3), Q(5)}, 1) == Q(8));
    const MultiFunction<Rational> sym = [](const std::vector<Rational>& u) { return u[0] * u[1] + u[2]; };
    CHECK(divided_difference(sym, {Q(3), Q(5), Q(7)}, 1) == Q(0));
    CHECK_FALSE(divided_difference(sym, {Q(3), Q(5), Q(7)}, 2) == Q(0));
}

TEST_CASE("Newton chain") {
    testing::RationalSource src(1);
    const UniFunction<Rational> x2 = [](const Rational& x) { return x * x; };
    CHECK(newton_chain(x2, src.distinct(3)) == Q(1));
    CHECK(newton_chain(x2, src.distinct(4)) == Q(0));
    CHECK(newton_chain(x2, std::vector<Rational>{Q(3)}) == Q(9));

    for (std::size_t n = 1; n <= 6; ++n) {
        const auto v = src.distinct(n);
        const Rational c = src.next();
        const UniFunction<Rational> f = [&](const Rational& x) {
            Rational a(1), b(1);
            for (const auto& vk : v) {
                a *= x - vk - c;
                b *= x - vk;
            }
            return a - b;
        };
        auto u = src.distinct(n);
        const Rational val = newton_chain(f, u);
        CHECK(val == -Rational(static_cast<long>(n)) * c);
        std::reverse(u.begin(), u.end());
        CHECK(newton_chain(f, u) == val);
        CHECK(operator_chain(f, u) == val);
    }
}

TEST_CASE("Newton chain of a polynomial matches the nested operators") {
    testing::RationalSource src(2);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Rational> coeffs;
        for (int k = 0; k <= 7; ++k) coeffs.push_back(src.next());
        const UniPoly<Rational> p(coeffs);
        const UniFunction<Rational> f = [&](const Rational& x) { return p(x); };
        const auto u = src.distinct(n);
        CHECK(newton_chain(p, u) == operator_chain(f, u));
    }
}

TEST_CASE("UniPoly basics") {
    const UniPoly<Rational> p({Q(1), Q(2), Q(0), Q(0)});
    CHECK(p.degree() == 1);
    CHECK(p.leading() == Q(2));
    CHECK(p(Q(3)) == Q(7));
    CHECK(UniPoly<Rational>().degree() == -1);
}

TEST_CASE("Sym_c") {
    testing::RationalSource src(3);
    const MultiFunction<Rational> one = [](const std::vector<Rational>&) { return Rational(1); };
    const MultiFunction<Rational> first = [](const std::vector<Rational>& u) { return u[0]; };
    const auto u1 = src.distinct(1);
    CHECK(sym_c(first, u1, src.next()) == u1[0]);
    for (std::size_t n = 1; n <= 5; ++n) {
        Rational fact(1);
        for (std::size_t k = 2; k <= n; ++k) fact *= Rational(static_cast<long>(k));
        CHECK(sym_c(one, src.distinct(n), Q(0)) == fact);
        CHECK(sym_c(one, src.distinct(n), src.next()) == fact);
    }
}

TEST_CASE("theta shift is cyclic with a c step") {
    const MultiFunction<Rational> g = [](const std::vector<Rational>& u) { return u[0] + 10 * u[1] + 100 * u[2]; };
    const std::vector<Rational> u = {Q(1), Q(2), Q(3)};
    // u_1 -> u_2, u_2 -> u_3, u_3 -> u_1 + c
    CHECK(theta_shift(g, 1, Q(5))(u) == Q(2) + 10 * Q(3) + 100 * Q(6));
    CHECK(theta_shift(g, 3, Q(5))(u) == g({Q(6), Q(7), Q(8)}));
}

TEST_CASE("lascoux_theorem3 sides agree") {
    testing::RationalSource src(4);
    const UniFunction<Rational> cube = [](const Rational& x) { return x * x * x - 2 * x + 1; };
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto all = src.distinct(2 * n);
        const std::vector<Rational> u(all.begin(), all.begin() + n), v(all.begin() + n, all.end());
        const auto zero = lascoux_theorem3(u, v, Q(0), cube);
        CHECK(zero.lhs == Q(0));
        CHECK(zero.rhs == Q(0));
        const Rational c = src.next();
        const auto pr = lascoux_theorem3(u, v, c, cube);
        CHECK(pr.lhs == pr.rhs);
    }
}

TEST_CASE("lascoux_theorem4 small cases") {
    testing::RationalSource src(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto all = src.distinct(4);
        const Rational c = src.next();
        const auto one = lascoux_theorem4({all[0]}, {all[1]}, c);
        CHECK(one.lhs == -c / (all[0] - all[1]));
        CHECK(one.rhs == one.lhs);

        const Rational u1 = all[0], u2 = all[1], v1 = all[2], v2 = all[3];
        const Rational poly = c * c - c * u1 - c * u2 + c * v1 + c * v2 - u1 * v1 - u2 * v1 - u1 * v2 - u2 * v2 +
                              2 * u1 * u2 + 2 * v1 * v2;
        const Rational expected = 2 * c * c * poly / ((u1 - v1) * (u1 - v2) * (u2 - v1) * (u2 - v2));
        const auto two = lascoux_theorem4({u1, u2}, {v1, v2}, c);
        CHECK(two.lhs == expected);
        CHECK(two.rhs == expected);

        const auto zero = lascoux_theorem4({u1, u2}, {v1, v2}, Q(0));
        CHECK(zero.lhs == Q(0));
        CHECK(zero.rhs == Q(0));
    }
}

}
