#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "srcid/scalar.hpp"
#include "srcid/wall_crossing.hpp"

using namespace srcid;
using testing::Q;

namespace {

// A collection of total size k is a k-subset of [1..ell] with a set
// partition on it (the order is forced by the minima).
long bell(int k) {
    std::vector<std::vector<long>> tri(k + 1);
    tri[0] = {1};
    for (int i = 1; i <= k; ++i) {
        tri[i] = {tri[i - 1].back()};
        for (long x : tri[i - 1]) tri[i].push_back(tri[i].back() + x);
    }
    return tri[k][0];
}

bool well_formed(const DecCollection& d, int ell, int k) {
    std::set<int> seen;
    int prev_min = ell + 1, total = 0;
    for (const auto& part : d.parts) {
        if (part.empty()) return false;
        const int mn = *std::min_element(part.begin(), part.end());
        if (mn >= prev_min) return false;
        prev_min = mn;
        for (int x : part) {
            if (x < 1 || x > ell || !seen.insert(x).second) return false;
            ++total;
        }
    }
    return total == k && d.total() == k;
}

}  // namespace

TEST_SUITE("wall_crossing") {

TEST_CASE("Dec enumeration") {
    const auto one = enumerate_dec(2, 1, false);
    REQUIRE(one.size() == 2);
    CHECK(one[0].parts.size() == 1);
    CHECK(enumerate_dec(2, 2, false).size() == 2);
    const auto two = enumerate_dec(2, 2, true);
    REQUIRE(two.size() == 1);
    CHECK(two[0].parts == std::vector<std::vector<int>>{{2}, {1}});
    CHECK(two[0].singletons());
    CHECK(two[0].total() == 2);
    for (int ell = 0; ell <= 3; ++ell) {
        const auto none = enumerate_dec(ell, 0, false);
        REQUIRE(none.size() == 1);
        CHECK(none[0].parts.empty());
    }
    for (int ell = 1; ell <= 5; ++ell)
        for (int k = 0; k <= ell; ++k) {
            CAPTURE(ell);
            CAPTURE(k);
            const auto all = enumerate_dec(ell, k, false);
            CHECK(all.size() == static_cast<std::size_t>(binomial(ell, k) * bell(k)));
            std::set<std::vector<std::vector<int>>> distinct;
            for (const auto& d : all) {
                CHECK(well_formed(d, ell, k));
                distinct.insert(d.parts);
            }
            CHECK(distinct.size() == all.size());
            const auto single = enumerate_dec(ell, k, true);
            CHECK(single.size() == static_cast<std::size_t>(binomial(ell, k)));
            for (const auto& d : single) CHECK(d.singletons());
        }
}

TEST_CASE("tail complement") {
    DecCollection d{{{3}, {1, 4}}};
    CHECK(d.tail_complement(4, 0) == std::vector<int>{1, 2, 4});
    CHECK(d.tail_complement(4, 1) == std::vector<int>{2});
}

TEST_CASE("s statistics") {
    CHECK(s_stat({2}, {1, 3}, false) == 1);
    CHECK(s_stat({1}, {2, 3}, true) == 2);
    CHECK(s_stat({3}, {1, 2}, true) == -2);
    // s(I, J) + s(J, I) = |I| |J| for disjoint I, J
    const std::vector<int> a = {1, 4, 6}, b = {2, 3, 5, 7};
    CHECK(s_stat(a, b, false) + s_stat(b, a, false) == 12);
    CHECK(s_stat(a, b, true) == s_stat(a, b, false) - s_stat(b, a, false));
}

TEST_CASE("chi_t integrals") {
    testing::RationalSource src(1);
    const auto all = src.distinct(7);
    const std::vector<Rational> u(all.begin(), all.begin() + 3), v(all.begin() + 3, all.end());
    const Rational t = src.next();
    CHECK(chi_genus_integral(ChiSign::Plus, 0, t, u, v) == Q(1));
    CHECK(chi_genus_integral(ChiSign::Minus, 0, t, u, v) == Q(1));
    for (int ell = 0; ell <= 4; ++ell) CHECK(chi_genus_integral(ChiSign::Plus, ell, Q(1), u, v) == Rational(binomial(4, ell)));
    for (int ell = 0; ell <= 3; ++ell) CHECK(chi_genus_integral(ChiSign::Minus, ell, Q(1), u, v) == Rational(binomial(3, ell)));
}

TEST_CASE("coefficient identity") {
    testing::RationalSource src(2);
    const Rational t = src.next();
    {
        const auto all = src.distinct(8);
        const std::vector<Rational> u(all.begin(), all.begin() + 3), v(all.begin() + 3, all.end());
        const auto r = coeff_identity(3, t, u, v);
        CHECK(r.lhs == r.rhs);
        const auto r0 = coeff_identity(0, t, u, v);
        CHECK(r0.lhs == Q(1));
        CHECK(r0.rhs == Q(1));
    }
    {
        const auto all = src.distinct(6);
        const std::vector<Rational> u(all.begin(), all.begin() + 3), v(all.begin() + 3, all.end());
        for (int ell = 0; ell <= 3; ++ell) {
            const auto r = coeff_identity(ell, t, u, v);
            CHECK(r.lhs == r.rhs);
            CHECK(r.lhs == ipow(t, ell * (ell - 1) / 2) * chi_genus_integral(ChiSign::Plus, ell, t, u, v));
        }
    }
}

TEST_CASE("wall-crossing formula") {
    testing::RationalSource src(3);
    const auto all = src.distinct(6);
    const std::vector<Rational> u(all.begin(), all.begin() + 2), v(all.begin() + 2, all.end());
    const Rational t = src.next();
    for (int ell = 1; ell <= 3; ++ell) {
        const auto k = wallcrossing_K(ell, t, u, v);
        CHECK(k.lhs == k.rhs);
        const auto s = wallcrossing_K_singletons(ell, t, u, v);
        CHECK(s.lhs == s.rhs);
    }
}

TEST_CASE("the gamma filter matters once m > n") {
    testing::RationalSource src(4);
    const auto all = src.distinct(6);
    const std::vector<Rational> u(all.begin(), all.begin() + 2), v(all.begin() + 2, all.end());
    const Rational t = src.next();
    const GammaWeight everything = [](int) { return 1L; };
    const auto filtered = wallcrossing_K(2, t, u, v);
    const auto unfiltered = wallcrossing_K(2, t, u, v, everything);
    CHECK(filtered.lhs == filtered.rhs);
    CHECK_FALSE(unfiltered.lhs == unfiltered.rhs);
}

TEST_CASE("rational wall crossing") {
    testing::RationalSource src(5);
    const auto all = src.distinct(6);
    const std::vector<Rational> u(all.begin(), all.begin() + 2), v(all.begin() + 2, all.end());
    const Rational c = src.next();
    for (int ell = 0; ell <= 3; ++ell) {
        const auto r = wallcrossing_rational(ell, c, u, v);
        CHECK(r.lhs == r.rhs);
    }
}

TEST_CASE("hook products") {
    const Rational s = Q(2);
    for (int d = 1; d <= 5; ++d)
        for (int k = 0; k <= d; ++k) {
            const auto r = hook_product_identity(k, k, d, s);
            CHECK(r.lhs == r.rhs);
            Rational expected(1);
            for (int i = 0; i < k; ++i) expected *= sym_q_number(d - i, s);
            CHECK(r.lhs == expected);
        }
    for (int ell = 0; ell <= 4; ++ell) {
        const auto r = hook_product_identity(ell, 0, 3, s);
        CHECK(r.lhs == Q(1));
        CHECK(r.rhs == Q(1));
    }
    const auto r = hook_product_identity(4, 2, 3, s);
    CHECK(r.lhs == r.rhs);
    const auto lim = hook_product_limit(4, 2, 3);
    CHECK(lim.lhs == lim.rhs);
    CHECK(lim.rhs == Q(3));
}

}
