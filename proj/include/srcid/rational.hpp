#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace srcid {

// Exact rational number backed by GMP. Always canonical: lowest terms,
// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
    Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

Rational abs(const Rational& x);

}  // namespace srcid
