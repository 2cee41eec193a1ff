#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "xoplab/bigint.hpp"

namespace xoplab {

// Exact rational number. Always reduced to lowest terms with a positive
// denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(BigInt n, BigInt d);

    // Accepts "p", "p/q", optional leading sign.
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.sign() < 0; }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& rhs) const;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    double to_double() const;
    long double to_long_double() const;
    std::string to_string() const;           // "p" when the value is integral
    std::string to_fraction_string() const;  // always "p/q"

private:
    void normalize();
    BigInt num_, den_;
};

// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
Rational pochhammer(const Rational& a, unsigned n);

// Generalized binomial coefficient a(a-1)...(a-k+1)/k! with rational a.
Rational gen_binomial(const Rational& a, unsigned k);

Rational rational_factorial(unsigned n);

}  // namespace xoplab
