// Independent quadrature oracle for the integral-route formulas: adaptive
// Simpson on the weighted integrands must reproduce the closed-form
// polynomials. This deliberately avoids the library's antiderivative
// machinery so a transcription error there cannot cancel out.
#include "doctest.h"

#include <cmath>
#include <functional>

#include "xoplab/xop_direct.hpp"

using namespace xoplab;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

double adaptive(const std::function<double(double)>& f, double a, double b, double whole,
                double tol, int depth) {
    double c = 0.5 * (a + b);
    double left = simpson(f, a, c);
    double right = simpson(f, c, b);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, c, left, 0.5 * tol, depth - 1) +
           adaptive(f, c, b, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12) {
    return adaptive(f, a, b, simpson(f, a, b), tol, 28);
}

double eval(const PolyQ& p, double x) {
    return to_complex(p)(Complex(x, 0.0)).real();
}

}  // namespace

TEST_CASE("type-I integral formula against quadrature") {
    // L^I(x) = (a+n) x^(-a) int_0^x t^(a-1) L_m^(a-1)(-t) L_{n-m}^(a-1)(t) dt.
    for (int m : {1, 2})
        for (int n : {2, 4, 5}) {
            if (n < m) continue;
            for (Rational a : {Rational(1), Rational(2)}) {
                PolyQ target = xlaguerre(make_lag1(m, n, a), Method::Integral);
                PolyQ factor1 =
                    laguerre(m, a - Rational(1)).compose_affine(Rational(0), Rational(-1));
                PolyQ factor2 = laguerre(n - m, a - Rational(1));
                double ad = a.to_double();
                auto integrand = [&](double t) {
                    return std::pow(t, ad - 1.0) * eval(factor1, t) * eval(factor2, t);
                };
                for (double x : {0.5, 1.0, 2.5}) {
                    double lhs = eval(target, x);
                    double rhs = (ad + n) * std::pow(x, -ad) * integrate(integrand, 0.0, x);
                    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
                }
            }
        }
}

TEST_CASE("type-I integral formula, fractional parameter via substitution") {
    // With a = 3/2 the weight t^(1/2) is handled by t = s^2, which turns the
    // integrand into a polynomial in s.
    Rational a(3, 2);
    for (int m : {1, 2})
        for (int n : {3, 5}) {
            PolyQ target = xlaguerre(make_lag1(m, n, a), Method::Integral);
            PolyQ factor1 =
                laguerre(m, a - Rational(1)).compose_affine(Rational(0), Rational(-1));
            PolyQ factor2 = laguerre(n - m, a - Rational(1));
            auto integrand = [&](double s) {
                double t = s * s;
                return 2.0 * s * s * eval(factor1, t) * eval(factor2, t);
            };
            for (double x : {0.7, 1.8}) {
                double lhs = eval(target, x);
                double rhs = (a.to_double() + n) * std::pow(x, -1.5) *
                             integrate(integrand, 0.0, std::sqrt(x));
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
            }
        }
}

TEST_CASE("type-II integral formula against truncated quadrature") {
    // L^II(x) = -(a+n+1-2m) e^x int_x^inf e^(-t) L_m^(-a-1)(t) L_{n-m}^(a+1)(t) dt;
    // the tail beyond x + 70 is below every tolerance in play.
    for (int m : {1, 2})
        for (int n : {2, 4}) {
            if (n < m) continue;
            Rational a = Rational(m) + Rational(1, 3);
            PolyQ target = xlaguerre(make_lag2(m, n, a), Method::Integral);
            PolyQ f1 = laguerre(m, -a - Rational(1));
            PolyQ f2 = laguerre(n - m, a + Rational(1));
            auto integrand = [&](double t) {
                return std::exp(-t) * eval(f1, t) * eval(f2, t);
            };
            for (double x : {0.0, 1.5, 3.0}) {
                double lhs = eval(target, x);
                double rhs = -(a.to_double() + n + 1 - 2 * m) * std::exp(x) *
                             integrate(integrand, x, x + 70.0);
                CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
            }
        }
}

TEST_CASE("type-III integral formula against quadrature") {
    for (int m : {1, 2})
        for (int n : {3, 5}) {
            if (n <= m) continue;
            Rational a(-1, 2);
            PolyQ target = xlaguerre(make_lag3(m, n, a), Method::Integral);
            PolyQ f1 = laguerre(n - m - 1, a + Rational(1));
            PolyQ f2 =
                laguerre(m, -a - Rational(1)).compose_affine(Rational(0), Rational(-1));
            Rational constant = Rational(m + 1) *
                                gen_binomial(Rational(n - m) + a,
                                             static_cast<unsigned>(n - m - 1)) *
                                gen_binomial(Rational(m) - a - Rational(1),
                                             static_cast<unsigned>(m + 1));
            auto integrand = [&](double t) { return eval(f1, t) * eval(f2, t); };
            for (double x : {0.4, 1.2, 2.0}) {
                double lhs = eval(target, x);
                double rhs = n * integrate(integrand, 0.0, x) + constant.to_double();
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
            }
        }
}

TEST_CASE("exceptional jacobi integral formula against quadrature") {
    // P(x) = pre * (x+1)^(-b) int_{-1}^x (t+1)^(b-1) P_m^(-a-1,b-1) P_{n-m}^(a+1,b-1) dt.
    for (int m : {1, 2})
        for (int n : {2, 4}) {
            if (n < m) continue;
            Rational a = Rational(m) + Rational(1, 3);
            for (Rational b : {Rational(1), Rational(3, 2)}) {
                auto spec = make_xjacobi(m, n, a, b);
                if (validate(spec)) continue;
                PolyQ target = xjacobi(spec, Method::Integral);
                PolyQ f1 = jacobi(m, -a - Rational(1), b - Rational(1));
                PolyQ f2 = jacobi(n - m, a + Rational(1), b - Rational(1));
                double bd = b.to_double();
                double pre = (m % 2 ? -1.0 : 1.0) * (bd + n) *
                             (a.to_double() + n - 2 * m + 1) /
                             (a.to_double() + n - m + 1);
                // Substitute t+1 = s^2 when b is half-integral so the weight
                // is polynomial in s; for integer b integrate directly.
                for (double x : {-0.3, 0.5, 0.9}) {
                    double rhs;
                    if (b.is_integer()) {
                        auto integrand = [&](double t) {
                            return std::pow(t + 1.0, bd - 1.0) * eval(f1, t) * eval(f2, t);
                        };
                        rhs = integrate(integrand, -1.0, x);
                    } else {
                        auto integrand = [&](double s) {
                            double t = s * s - 1.0;
                            return 2.0 * std::pow(s, 2.0 * bd - 1.0) * eval(f1, t) *
                                   eval(f2, t);
                        };
                        rhs = integrate(integrand, 0.0, std::sqrt(x + 1.0));
                    }
                    rhs *= pre * std::pow(x + 1.0, -bd);
                    double lhs = eval(target, x);
                    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
                }
            }
        }
}

TEST_CASE("hermite integral formula against quadrature") {
    PolyQ h11 = generalized_hermite(Partition({1, 1}));
    for (int n : {3, 5, 8}) {
        PolyQ target = xhermite(make_hermite11(n), Method::Integral);
        PolyQ hn3 = hermite(n - 3);
        double constant = 16.0 * (n - 1) * (n - 2) * eval(hermite(n - 2), 0.0);
        auto integrand = [&](double t) { return eval(h11, t) * eval(hn3, t); };
        for (double x : {0.5, 1.5}) {
            double lhs = eval(target, x);
            double rhs = 8.0 * n * (n - 1) * (n - 2) * integrate(integrand, 0.0, x) + constant;
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}
