#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xoplab {

// Arbitrary-precision signed integer, sign + magnitude in base-2^32 limbs.
// The magnitude is little-endian with no trailing zero limbs; zero is the
// empty limb vector with non-negative sign.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division (quotient rounds toward zero, remainder has the
    // sign of the dividend). Throws std::domain_error on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // non-negative

    bool operator==(const BigInt& rhs) const;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::string to_string() const;
    double to_double() const;
    long double to_long_double() const;
    std::size_t bit_length() const;  // 0 for zero

    // Hash-friendly access for tests.
    const std::vector<std::uint32_t>& limbs() const { return limbs_; }

private:
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static void add_magnitude(std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b);
    static void sub_magnitude(std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b);  // a >= b
    static std::vector<std::uint32_t> mul_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void divmod_magnitude(const std::vector<std::uint32_t>& u,
                                 const std::vector<std::uint32_t>& v,
                                 std::vector<std::uint32_t>& q,
                                 std::vector<std::uint32_t>& r);
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& u, std::uint32_t d);
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;
};

BigInt factorial(unsigned n);

}  // namespace xoplab
