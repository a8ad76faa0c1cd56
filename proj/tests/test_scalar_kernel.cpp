#include <cmath>

#include "helpers.hpp"
#include "srcid/scalar.hpp"

using namespace srcid;
using testing::Q;

TEST_SUITE("scalar_kernel") {

TEST_CASE("rationals stay reduced with a positive denominator") {
    CHECK(Q(2, 4).str() == "1/2");
    CHECK(Q(3, -6).str() == "-1/2");
    CHECK(Q(0, -5).str() == "0");
    CHECK((Q(1, 3) + Q(1, 6)).str() == "1/2");
    CHECK(Rational::parse("-10/4") == Q(-5, 2));
    CHECK_THROWS_AS(Q(1, 0), Error);
}

TEST_CASE("checked division rejects near-zero denominators") {
    CHECK_THROWS_AS(checked_div(Q(1), Q(0)), SingularError);
    CHECK(checked_div(Q(1), Q(1, 1000000)) == Q(1000000));
    CHECK_THROWS_AS(checked_div(Complex(1.0), Complex(1e-4, 0.0), 1e-3), SingularError);
    CHECK(checked_div(Complex(1.0), Complex(2e-3, 0.0), 1e-3) == Complex(500.0));
}

TEST_CASE("relative residual and closeness") {
    CHECK(relative_residual(Q(1, 3), Q(1, 3)) == 0.0);
    CHECK(relative_residual(Q(1, 3), Q(1, 3) + Q(1, 1000000000)) > 0.0);
    CHECK(relative_residual(Complex(100.0), Complex(101.0)) == doctest::Approx(1.0 / 101.0));
    CHECK(close(Complex(1.0), Complex(1.0 + 1e-12), 1e-11));
    CHECK_FALSE(close(Complex(1.0), Complex(1.0 + 1e-9), 1e-11));
}

TEST_CASE("qpoch_inf") {
    CHECK(qpoch_inf(Complex(0.0), Complex(0.5)) == Complex(1.0));

    Complex brute(1.0);
    for (int j = 0; j < 200; ++j) brute *= 1.0 - 0.5 * std::pow(0.5, j);
    CHECK(testing::near(qpoch_inf(Complex(0.5), Complex(0.5)), brute, 1e-13));

    const Complex split = qpoch_n(Complex(0.5), Complex(0.5), 50) * qpoch_inf(Complex(0.5 * std::pow(0.5, 50)), Complex(0.5));
    CHECK(testing::near(qpoch_inf(Complex(0.5), Complex(0.5)), split, 1e-12));

    CHECK_THROWS_AS(qpoch_inf(Complex(0.5), Complex(0.95)), Error);
    CHECK_THROWS_AS(qpoch_inf(Q(1, 2), Q(1, 2)), Error);
}

TEST_CASE("truncation length follows the geometric tail bound") {
    Truncation t;
    CHECK(t.terms_for(0.5) == static_cast<int>(std::ceil(std::log(1e-14) / std::log(0.5))) + 8);
    CHECK(t.terms_for(0.0) >= 1);
    // a large first factor needs log(leading) / log(1 / modulus) more terms
    CHECK(t.terms_for(0.5, 1024.0) == t.terms_for(0.5) + 10);
    CHECK(t.terms_for(0.5, 0.25) == t.terms_for(0.5));
    t.max_terms = 20;
    CHECK(t.terms_for(0.89) == 20);
}

TEST_CASE("theta stays accurate at large arguments") {
    // walk outward with theta(y / p) = -(y / p) theta(y); |y| reaches ~1e4
    const Complex p(0.45, 0.05);
    Complex y(0.7, 0.4);
    Complex val = theta(y, p);
    for (int k = 1; k <= 12; ++k) {
        y /= p;
        val *= -y;
        CHECK(testing::near(theta(y, p), val, 1e-11));
    }
}

TEST_CASE("qpoch_n") {
    CHECK(qpoch_n(Q(7, 3), Q(5), 0) == Q(1));
    CHECK(qpoch_n(Q(1), Q(2), -1) == Q(2));  // 1/(1 - z/2) at z = 1
    CHECK(qpoch_n(Q(3), Q(2), 2) == Q(10));
    CHECK_THROWS_AS(qpoch_n(Q(2), Q(2), -1), SingularError);  // 1 - 2/2 = 0
}

TEST_CASE("qpoch_n times the infinite tail is the full product") {
    testing::ComplexSource src(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex u = src.next(0.2, 2.0), q = src.next(0.2, 0.8);
        for (long n = -5; n <= 5; ++n) {
            const Complex lhs = qpoch_n(u, q, n) * qpoch_inf(u * ipow(q, n), q);
            CHECK(testing::near(lhs, qpoch_inf(u, q), 1e-11));
        }
    }
}

TEST_CASE("theta") {
    CHECK(theta(Complex(0.5), Complex(0.0)) == Complex(0.5));
    CHECK(theta(Q(1, 2), Q(0)) == Q(1, 2));
    CHECK(theta(Complex(1.0), Complex(0.3)) == Complex(0.0));
    const Complex u(2.0), p(0.3);
    CHECK(testing::near(theta(p * u, p), -theta(u, p) / u, 1e-12));
    CHECK_THROWS_AS(theta(Complex(0.0), Complex(0.3)), Error);
    CHECK_THROWS_AS(theta(Complex(2.0), Complex(0.95)), Error);
    CHECK_THROWS_AS(theta(Q(2), Q(1, 3)), Error);
}

TEST_CASE("theta quasi-periodicity on random points") {
    testing::ComplexSource src(5);
    for (int i = 0; i < 100; ++i) {
        const Complex u = src.next(0.2, 3.0), p = src.next(0.05, 0.5);
        const Complex th = theta(u, p);
        CHECK(std::abs(u * theta(p * u, p) + th) <= 1e-11 * (1.0 + std::abs(th)));
    }
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(2, 1, Q(3)) == Q(4));
    CHECK(q_binomial(4, 2, Q(1)) == Q(6));
    CHECK_THROWS_AS(q_binomial(3, 4, Q(2)), DomainError);
    CHECK_THROWS_AS(q_binomial(3, -1, Q(2)), DomainError);

    // coefficients of prod_{j=1}^5 (1 + q^j z) are q^{l(l+1)/2} [5, l]_q
    const Rational q = Q(1, 2);
    std::vector<Rational> poly = {Q(1)};
    for (long j = 1; j <= 5; ++j) {
        std::vector<Rational> next(poly.size() + 1, Q(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] += poly[k] * ipow(q, j);
        }
        poly = next;
    }
    CHECK(poly[2] == ipow(q, 3) * q_binomial(5, 2, q));
    for (long l = 0; l <= 5; ++l) CHECK(poly[l] == ipow(q, l * (l + 1) / 2) * q_binomial(5, l, q));
}

TEST_CASE("q-binomial Pascal recursion") {
    testing::RationalSource src(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational q = src.next();
        for (long n = 1; n <= 8; ++n)
            for (long l = 1; l < n; ++l)
                CHECK(q_binomial(n, l, q) == q_binomial(n - 1, l, q) + ipow(q, n - l) * q_binomial(n - 1, l - 1, q));
    }
}

TEST_CASE("symmetric q-numbers") {
    CHECK(sym_q_number(2, Q(2)) == Q(5, 2));
    CHECK(sym_q_number(1, Q(7, 3)) == Q(1));
    CHECK(sym_q_number(3, Q(2)) == Q(21, 4));
    CHECK(sym_q_number(3, Q(2)) == q_integer(3, Q(4)) / Q(4));
    CHECK(sym_q_number(-3, Q(2)) == -sym_q_number(3, Q(2)));
    CHECK(sym_q_factorial(3, Q(2)) == sym_q_number(2, Q(2)) * sym_q_number(3, Q(2)));
    CHECK_THROWS_AS(sym_q_number(2, Q(1)), Error);
    CHECK_THROWS_AS(sym_q_number(2, Q(-1)), Error);
    CHECK_THROWS_AS(sym_q_number(2, Q(0)), Error);

    testing::RationalSource src(9);
    for (int trial = 0; trial < 10; ++trial) {
        Rational s = src.next();
        while (s == Q(1) || s == Q(-1)) s = src.next();
        for (long n = 0; n <= 8; ++n) CHECK(ipow(s, n - 1) * sym_q_number(n, s) == q_integer(n, s * s));
    }
}

TEST_CASE("three-term relation of symmetric q-numbers") {
    testing::RationalSource src(21);
    for (int trial = 0; trial < 50; ++trial) {
        Rational s = src.next(9);
        while (s == Q(1) || s == Q(-1)) s = src.next(9);
        const long x = src.integer(-6, 6), y = src.integer(-6, 6), u = src.integer(-6, 6), v = src.integer(-6, 6);
        auto n = [&](long k) { return sym_q_number(k, s); };
        CHECK(n(x - u) * n(y - v) - n(x - v) * n(y - u) == n(x - y) * n(u - v));
    }
}

TEST_CASE("psi_A") {
    CHECK(psi_A(2, 3, Q(5), Q(0), Q(7)) == Q(5));
    CHECK(psi_A(1, 2, Q(2), Q(0), Q(3)) == Q(13));
    const Complex u(1.3, 0.4), r(0.7, -0.2);
    const Complex at_zero = psi_A(1, 2, u, Complex(0.0), r);
    CHECK(std::abs(psi_A(1, 2, u, Complex(1e-7), r) - at_zero) <= 1e-6);
    CHECK(testing::near(psi_A(1, 2, u, Complex(0.2), r), theta(-r * u * u, Complex(0.04)), 1e-14));
}

TEST_CASE("classical binomials and factorials") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(6) == 720);
}

}
