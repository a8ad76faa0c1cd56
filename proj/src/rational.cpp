#include "srcid/rational.hpp"

#include "srcid/errors.hpp"

namespace srcid {

Rational::Rational(long num, long den) {
    if (den == 0) throw SingularError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) throw DomainError("not a rational: " + std::string(text));
    if (sgn(v.get_den()) == 0) throw SingularError("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularError("exact division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace srcid
