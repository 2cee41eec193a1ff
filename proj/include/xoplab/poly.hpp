#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "xoplab/rational.hpp"

namespace xoplab {

using Complex = std::complex<double>;

namespace detail {
inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Complex& v) { return v.real() == 0.0 && v.imag() == 0.0; }
inline Rational scalar_one(const Rational*) { return Rational(1); }
inline Complex scalar_one(const Complex*) { return Complex(1.0, 0.0); }
inline Rational scalar_from_int(const Rational*, long long v) { return Rational(v); }
inline Complex scalar_from_int(const Complex*, long long v) {
    return Complex(static_cast<double>(v), 0.0);
}
}  // namespace detail

// Dense univariate polynomial. coeffs[j] multiplies x^j; the top stored
// coefficient is nonzero. The zero polynomial is the empty sequence and has
// degree -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    static Polynomial monomial(T coeff, std::size_t k) {
        std::vector<T> c(k + 1, T{});
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    // x as a polynomial.
    static Polynomial identity() {
        return monomial(detail::scalar_one(static_cast<const T*>(nullptr)), 1);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const T> coeffs() const { return c_; }

    // Coefficient of x^j; zero beyond the stored degree.
    T coeff(std::size_t j) const { return j < c_.size() ? c_[j] : T{}; }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), T{});
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), T{});
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial scaled(const T& s) const {
        if (detail::scalar_is_zero(s)) return Polynomial();
        std::vector<T> out = c_;
        for (auto& v : out) v = v * s;
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<T> out = c_;
        for (auto& v : out) v = -v;
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }

    // k-th derivative; the degree drops by exactly k (or the result is zero).
    Polynomial derivative(unsigned k = 1) const {
        Polynomial p = *this;
        for (unsigned round = 0; round < k; ++round) {
            if (p.c_.size() <= 1) return Polynomial();
            std::vector<T> out(p.c_.size() - 1);
            for (std::size_t j = 1; j < p.c_.size(); ++j)
                out[j - 1] = p.c_[j] * detail::scalar_from_int(static_cast<const T*>(nullptr),
                                                               static_cast<long long>(j));
            p = Polynomial(std::move(out));
        }
        return p;
    }

    // F with F' = *this and F(0) = 0.
    Polynomial antiderivative() const {
        if (is_zero()) return Polynomial();
        std::vector<T> out(c_.size() + 1, T{});
        for (std::size_t j = 0; j < c_.size(); ++j) {
            T d = detail::scalar_from_int(static_cast<const T*>(nullptr),
                                          static_cast<long long>(j + 1));
            out[j + 1] = c_[j] / d;
        }
        return Polynomial(std::move(out));
    }

    // Horner evaluation.
    T operator()(const T& z) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    // p(a + b*x), exact change of variable.
    Polynomial compose_affine(const T& a, const T& b) const {
        Polynomial lin(std::vector<T>{a, b});
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * lin + Polynomial::constant(c_[i]);
        }
        return acc;
    }

    // p(x^2): spread coefficients to even powers.
    Polynomial compose_square() const {
        if (is_zero()) return Polynomial();
        std::vector<T> out(2 * c_.size() - 1, T{});
        for (std::size_t j = 0; j < c_.size(); ++j) out[2 * j] = c_[j];
        return Polynomial(std::move(out));
    }

    // Coefficients e_k with p(x) = sum e_k (x - c)^k, via repeated synthetic
    // division. A constant (or zero) polynomial yields a single entry.
    std::vector<T> shift_basis(const T& c) const {
        std::vector<T> work = c_;
        if (work.empty()) work.push_back(T{});
        std::vector<T> out;
        out.reserve(work.size());
        for (std::size_t round = 0; round < c_.size() || round == 0; ++round) {
            if (work.empty()) break;
            // One synthetic-division pass by (x - c); the remainder is e_round.
            for (std::size_t i = work.size() - 1; i-- > 0;) work[i] += work[i + 1] * c;
            out.push_back(work.front());
            work.erase(work.begin());
        }
        if (out.empty()) out.push_back(T{});
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using PolyQ = Polynomial<Rational>;
using PolyC = Polynomial<Complex>;

// Quotient/remainder with deg(r) < deg(b). Field coefficients required.
template <class T>
void poly_divmod(const Polynomial<T>& a, const Polynomial<T>& b, Polynomial<T>& q,
                 Polynomial<T>& r) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    if (a.degree() < db) {
        q = Polynomial<T>();
        r = a;
        return;
    }
    std::vector<T> quot(a.degree() - db + 1, T{});
    const T& lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        T f = rem[k + db] / lead;
        quot[k] = f;
        if (!detail::scalar_is_zero(f)) {
            for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
        }
    }
    q = Polynomial<T>(std::move(quot));
    r = Polynomial<T>(std::move(rem));
}

// Wronskian determinant of a list of polynomials: entry (i, j) is the i-th
// derivative of ps[j]. Expanded by Laplace recursion over column subsets.
template <class T>
Polynomial<T> wronskian(std::span<const Polynomial<T>> ps) {
    const std::size_t k = ps.size();
    if (k == 0) throw std::invalid_argument("wronskian: empty list");
    if (k > 20) throw std::invalid_argument("wronskian: too many polynomials");
    std::vector<std::vector<Polynomial<T>>> deriv(k);
    for (std::size_t j = 0; j < k; ++j) {
        deriv[j].push_back(ps[j]);
        for (std::size_t i = 1; i < k; ++i) deriv[j].push_back(deriv[j][i - 1].derivative());
    }
    // minor[mask] = determinant of rows 0..popcount-1 and the column set mask.
    std::vector<Polynomial<T>> minor(std::size_t{1} << k);
    minor[0] = Polynomial<T>::constant(detail::scalar_one(static_cast<const T*>(nullptr)));
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
        const int rows = std::popcount(mask);
        Polynomial<T> acc;
        int pos = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask >> j & 1)) continue;
            Polynomial<T> term = deriv[j][rows - 1] * minor[mask & ~(std::size_t{1} << j)];
            if (pos % 2 == (rows - 1) % 2)
                acc += term;
            else
                acc -= term;
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(std::size_t{1} << k) - 1];
}

template <class T>
Polynomial<T> wronskian(const std::vector<Polynomial<T>>& ps) {
    return wronskian(std::span<const Polynomial<T>>(ps));
}

inline Complex to_complex(const Rational& v) { return Complex(v.to_double(), 0.0); }

inline PolyC to_complex(const PolyQ& p) {
    std::vector<Complex> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
    return PolyC(std::move(out));
}

// Horner evaluation of an exact polynomial at a complex point. Errors out on
// a non-finite result instead of letting NaN/Inf escape.
inline Complex evaluate_checked(const PolyC& p, const Complex& z) {
    Complex v = p(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::range_error("evaluate: non-finite result");
    return v;
}

}  // namespace xoplab
