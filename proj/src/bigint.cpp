#include "xoplab/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace xoplab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // Avoid UB on LLONG_MIN by working in unsigned space.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1ull
                                  : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    std::uint64_t carry = 0;
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0u);
        a[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(d);
    }
}

std::vector<std::uint32_t> BigInt::mul_magnitude(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_magnitude(limbs_, rhs.limbs_);
    } else {
        int c = compare_magnitude(limbs_, rhs.limbs_);
        if (c >= 0) {
            sub_magnitude(limbs_, rhs.limbs_);
        } else {
            std::vector<std::uint32_t> tmp = rhs.limbs_;
            sub_magnitude(tmp, limbs_);
            limbs_ = std::move(tmp);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_ = BigInt::mul_magnitude(a.limbs_, b.limbs_);
    r.negative_ = !r.limbs_.empty() && (a.negative_ != b.negative_);
    return r;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

std::uint32_t BigInt::divmod_small(std::vector<std::uint32_t>& u, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u[i];
        u[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    return static_cast<std::uint32_t>(rem);
}

// Knuth algorithm D on normalized limbs.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& u,
                              const std::vector<std::uint32_t>& v,
                              std::vector<std::uint32_t>& q,
                              std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (compare_magnitude(u, v) < 0) {
        r = u;
        return;
    }
    if (v.size() == 1) {
        q = u;
        std::uint32_t rem = divmod_small(q, v[0]);
        if (rem) r.push_back(rem);
        return;
    }

    const int shift = std::countl_zero(v.back());
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;

    // Normalized copies: vn = v << shift, un = u << shift with one extra limb.
    std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t hi = static_cast<std::uint64_t>(v[i]) << shift;
        std::uint64_t lo = (shift && i > 0) ? (v[i - 1] >> (32 - shift)) : 0;
        vn[i] = static_cast<std::uint32_t>(hi | lo);
    }
    for (std::size_t i = u.size(); i-- > 0;) {
        std::uint64_t hi = static_cast<std::uint64_t>(u[i]) << shift;
        std::uint64_t lo = (shift && i > 0) ? (u[i - 1] >> (32 - shift)) : 0;
        std::uint64_t cur = hi | lo;
        un[i] |= static_cast<std::uint32_t>(cur & 0xffffffffu);
        un[i + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // Multiply-subtract qhat * vn from un[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c = s >> 32;
            }
            t += static_cast<std::int64_t>(c);
            t &= static_cast<std::int64_t>(0xffffffffll);
        }
        un[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    // Denormalize remainder.
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t hi = (shift && i + 1 < un.size())
                               ? (static_cast<std::uint64_t>(un[i + 1]) << (32 - shift))
                               : 0;
        r[i] = static_cast<std::uint32_t>((un[i] >> shift) | (shift ? hi : 0));
    }
    if (!shift) {
        for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    std::vector<std::uint32_t> qm, rm;
    divmod_magnitude(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = compare_magnitude(limbs_, rhs.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
        std::uint32_t chunk = divmod_small(tmp, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    std::size_t i = pos;
    while (i < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - i);
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (std::size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        out *= BigInt(static_cast<long long>(scale));
        out += BigInt(static_cast<long long>(chunk));
        i += take;
    }
    if (neg && !out.is_zero()) out.negative_ = true;
    return out;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

double BigInt::to_double() const { return static_cast<double>(to_long_double()); }

long double BigInt::to_long_double() const {
    if (is_zero()) return 0.0L;
    // Accumulate the top limbs, then scale by the discarded bit count.
    long double acc = 0.0L;
    int used = 0;
    std::size_t i = limbs_.size();
    while (i-- > 0 && used < 128) {
        acc = acc * 4294967296.0L + static_cast<long double>(limbs_[i]);
        used += 32;
    }
    long double result = std::ldexp(acc, static_cast<int>(32 * (i + 1)));
    return negative_ ? -result : result;
}

BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned k = 2; k <= n; ++k) r *= BigInt(static_cast<long long>(k));
    return r;
}

}  // namespace xoplab
