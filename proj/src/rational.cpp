#include "xoplab/rational.hpp"

#include <stdexcept>

namespace xoplab {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt::from_string(s), BigInt(1));
    }
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ = den_ * r.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ = den_ * r.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    num_ = num_ * r.num_;
    den_ = den_ * r.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ = num_ * r.den_;
    den_ = den_ * r.num_;
    normalize();
    return *this;
}

bool Rational::operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

double Rational::to_double() const { return static_cast<double>(to_long_double()); }

long double Rational::to_long_double() const {
    // num_ and den_ stay far below the overflow threshold at the degrees
    // this library works with, so the direct quotient is fine.
    return num_.to_long_double() / den_.to_long_double();
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_fraction_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    Rational term = a;
    for (unsigned k = 0; k < n; ++k) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

Rational gen_binomial(const Rational& a, unsigned k) {
    Rational r(1);
    Rational term = a;
    for (unsigned j = 0; j < k; ++j) {
        r *= term;
        term -= Rational(1);
    }
    return r / rational_factorial(k);
}

Rational rational_factorial(unsigned n) { return Rational(factorial(n), BigInt(1)); }

}  // namespace xoplab
