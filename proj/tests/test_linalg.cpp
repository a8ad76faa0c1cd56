#include "helpers.hpp"
#include "srcid/matrix.hpp"

using namespace srcid;
using testing::Q;

TEST_SUITE("linalg") {

TEST_CASE("small determinants") {
    CHECK(det(Matrix<Rational>::identity(3)) == Q(1));
    CHECK(det(Matrix<Complex>::identity(3)) == Complex(1.0));
    Matrix<Rational> m(2, 2);
    m(0, 0) = Q(1), m(0, 1) = Q(2), m(1, 0) = Q(3), m(1, 1) = Q(4);
    CHECK(det(m) == Q(-2));
    CHECK(det(Matrix<Rational>(0, 0)) == Q(1));
    Matrix<Rational> sing(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sing(i, j) = Q(i + j);
    CHECK(det(sing) == Q(0));
    CHECK_THROWS_AS(det(Matrix<Rational>(2, 3)), Error);
}

TEST_CASE("determinant against cofactor expansion") {
    testing::RationalSource src(1);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = src.next();
        CHECK(det(m) == testing::cofactor_det(m));
    }
    testing::ComplexSource csrc(2);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Complex> m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = csrc.next();
        CHECK(testing::near(det(m), testing::cofactor_det(m), 1e-12));
    }
}

TEST_CASE("determinant is multiplicative") {
    testing::RationalSource src(4);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix<Rational> a(4, 4), b(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a(i, j) = src.next(9);
                b(i, j) = src.next(9);
            }
        CHECK(det(multiply(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("Frobenius determinant") {
    const Complex p(0.3, 0.1), lam(0.8, -0.5);
    const std::vector<Complex> u1 = {Complex(1.2, 0.3)}, v1 = {Complex(0.7, -0.6)};
    const Complex one = theta(lam * u1[0] / v1[0], p) / (theta(lam, p) * theta(u1[0] / v1[0], p));
    CHECK(testing::near(det(frobenius_matrix(u1, v1, lam, p)), one, 1e-13));
    CHECK(testing::near(frobenius_closed(u1, v1, lam, p), one, 1e-13));

    testing::ComplexSource src(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = src.vec(4), v = src.vec(4);
        const Complex l = src.next();
        CHECK(testing::near(det(frobenius_matrix(u, v, l, Complex(0.3))), frobenius_closed(u, v, l, Complex(0.3)), 1e-9));
        CHECK(testing::near(det(frobenius_matrix(u, v, l, Complex(0.0))), frobenius_closed(u, v, l, Complex(0.0)), 1e-11));
    }
}

TEST_CASE("Frobenius closed form under permutations") {
    testing::ComplexSource src(23);
    const auto u = src.vec(4), v = src.vec(4);
    const Complex l = src.next(), p(0.2, 0.1);
    const Complex base = frobenius_closed(u, v, l, p);
    // swapping two u's swaps two rows: the determinant changes sign
    auto us = u;
    std::swap(us[0], us[2]);
    CHECK(testing::near(frobenius_closed(us, v, l, p), -base, 1e-10));
    auto vs = v;
    std::swap(vs[1], vs[3]);
    CHECK(testing::near(frobenius_closed(u, vs, l, p), -base, 1e-10));
    std::swap(vs[0], vs[2]);
    CHECK(testing::near(frobenius_closed(us, vs, l, p), -base, 1e-10));
}

TEST_CASE("elliptic Vandermonde") {
    const std::vector<Complex> u1 = {Complex(1.1, 0.2)};
    const auto one = elliptic_vandermonde_check(u1, Complex(0.3), Complex(0.6, 0.1));
    CHECK(testing::near(one.lhs, one.rhs, 1e-13));
    CHECK(testing::near(one.lhs, theta(Complex(0.6, 0.1) * u1[0], Complex(0.3)), 1e-13));

    const std::vector<Rational> u = {Q(2), Q(-1, 3), Q(5, 2)};
    const Rational r = Q(3, 7);
    const auto trig = elliptic_vandermonde_check(u, Q(0), r);
    Rational expected = Q(1) - r * u[0] * u[1] * u[2];
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) expected *= u[j] - u[i];
    CHECK(trig.lhs == trig.rhs);
    CHECK(trig.rhs == expected);

    testing::ComplexSource src(29);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const auto s = elliptic_vandermonde_check(src.vec(n), Complex(0.25), src.next());
            CHECK(testing::near(s.lhs, s.rhs, 1e-9));
        }
}

TEST_CASE("Cauchy-Vandermonde") {
    const std::vector<Rational> u1 = {Q(2)}, v1 = {Q(7, 3)};
    CHECK(det(cauchy_vandermonde_matrix(u1, v1)) == Q(3));
    CHECK(cauchy_vandermonde_closed(u1, v1) == Q(3));

    const std::vector<Rational> u2 = {Q(4), Q(-1)};
    const auto x = cauchy_vandermonde_matrix(u2, std::vector<Rational>{});
    CHECK(x(0, 0) == Q(4));
    CHECK(x(1, 0) == Q(1));
    CHECK(det(x) == Q(5));
    CHECK(cauchy_vandermonde_closed(u2, std::vector<Rational>{}) == Q(5));

    testing::RationalSource src(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto all = src.distinct(6);
        const std::vector<Rational> u(all.begin(), all.begin() + 4), v(all.begin() + 4, all.end());
        CHECK(det(cauchy_vandermonde_matrix(u, v)) == cauchy_vandermonde_closed(u, v));
    }
    CHECK_THROWS_AS(cauchy_vandermonde_closed(std::vector<Rational>{Q(1)}, std::vector<Rational>{Q(2), Q(3)}), Error);
}

}
