#pragma once

#include <string>
#include <vector>

#include "xoplab/poly.hpp"
#include "xoplab/report.hpp"

namespace xoplab {

// Integer partition lambda_1 >= lambda_2 >= ... >= lambda_m >= 1. The weight
// |lambda| is computed on demand, never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& csv);  // "2,1" -> (2,1)

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // Even length with equal consecutive pairs; such partitions have
    // Wronskians free of real zeros.
    bool is_even() const;

    std::string to_string() const;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Laguerre polynomial with exact rational coefficients,
//   L_n^(a)(x) = sum_{k=0}^{n} ((-1)^k / k!) C(n+a, n-k) x^k,
// a polynomial of degree n for every rational a (leading coefficient
// (-1)^n / n!). Negative n yields the zero polynomial.
PolyQ laguerre(int n, const Rational& alpha);

// Jacobi polynomial via the pole-free finite-product expansion
//   P_n^(a,b)(x) = (1/n!) sum_k C(n,k) (a+b+n+1)^(k) (a+k+1)^(n-k) ((x-1)/2)^k.
// Defined for all rational a, b; the degree can drop below n when
// a+b+n lies in {-1, ..., -n}. Negative n yields the zero polynomial.
PolyQ jacobi(int n, const Rational& alpha, const Rational& beta);

// True iff the degree-n Jacobi polynomial actually has degree n.
bool jacobi_degree_is_full(int n, const Rational& alpha, const Rational& beta);

// Hermite polynomial from the recurrence H_n = 2x H_{n-1} - H_{n-1}' with
// H_0 = 1, H_1 = 2x (the base cases forced by the Laguerre connection).
PolyQ hermite(int n);

// Wronskian factor list [H_{l_m}, H_{l_{m-1}+1}, ..., H_{l_1+m-1}].
std::vector<PolyQ> generalized_hermite_factors(const Partition& lambda);

// Generalized Hermite polynomial: the Wronskian of the factor list above.
// Degree is the partition weight.
PolyQ generalized_hermite(const Partition& lambda);

// Partial sum of the exponential series, E_n(x) = sum_{j<=n} x^j / j!.
PolyQ exp_partial_sum(int n);

// Partial sum of the binomial series for (1+x)^(-b),
//   R_n(x; b) = sum_{j<=n} b^(j) (-x)^j / j!.
PolyQ r_partial_sum(int n, const Rational& beta);

// Exact residual checks of the classical identity family: the Laguerre
// derivative / parameter-shift / three-term relations, the Hermite-Laguerre
// connection (both parities), the Hermite derivative and recurrence, the
// generalized Hermite Wronskian (degree + pointwise determinant oracle), and
// the partial-sum identities E_n = (-1)^n L_n^(-n-1) and
// R_n(x;b) = (-1)^n P_n^(-n-1,b)(1+2x). Appends one case per
// (identity, parameter) pair, sweeping n internally.
void check_classical_identities(int n_max, const std::vector<Rational>& alphas,
                                const std::vector<Rational>& betas,
                                VerificationReport& out);

}  // namespace xoplab
