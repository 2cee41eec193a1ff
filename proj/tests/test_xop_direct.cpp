#include "doctest.h"

#include "xoplab/xop_direct.hpp"

using namespace xoplab;

namespace {
PolyQ make(std::vector<Rational> c) { return PolyQ(std::move(c)); }
const PolyQ kX = PolyQ::identity();
}

TEST_CASE("spec validation names the violated constraint") {
    CHECK(validate(make_lag1(1, 1, Rational(1))) == std::nullopt);
    CHECK(validate(make_lag1(2, 1, Rational(1))).has_value());   // n < m
    CHECK(validate(make_lag1(1, 3, Rational(-1))).has_value());  // alpha <= 0
    CHECK(validate(make_lag2(2, 5, Rational(1, 2))).has_value());  // alpha <= m-1
    CHECK(validate(make_lag3(1, 1, Rational(-1, 2))).has_value());  // 1 <= n <= m
    CHECK(validate(make_lag3(1, 0, Rational(-1, 2))) == std::nullopt);
    CHECK(validate(make_lag3(1, 3, Rational(1, 2))).has_value());  // alpha not in (-1,0)
    CHECK(validate(make_xjacobi(1, 2, Rational(1, 2), Rational(-1))).has_value());
    CHECK(validate(make_xjacobi(2, 3, Rational(1, 2), Rational(1))).has_value());
    // alpha+1-m-beta landing in {0,...,m-1} is rejected.
    CHECK(validate(make_xjacobi(2, 4, Rational(5, 2), Rational(3, 2))).has_value());
    CHECK(validate(make_xjacobi(2, 4, Rational(5, 2), Rational(1))) == std::nullopt);
    CHECK(validate(make_hermite11(2)).has_value());
    CHECK(validate(make_hermite11(3)) == std::nullopt);
}

TEST_CASE("admissible degree set") {
    Partition lam({1, 1});
    CHECK(hermite_degree_admissible(lam, 0));
    CHECK_FALSE(hermite_degree_admissible(lam, 1));
    CHECK_FALSE(hermite_degree_admissible(lam, 2));
    CHECK(hermite_degree_admissible(lam, 3));
    Partition big({3, 1});
    // |lambda| = 4, m = 2: excluded degrees are 4+3-1 = 6 and 4+1-2 = 3.
    CHECK_FALSE(hermite_degree_admissible(big, 6));
    CHECK_FALSE(hermite_degree_admissible(big, 3));
    CHECK(hermite_degree_admissible(big, 2));
    CHECK_FALSE(hermite_degree_admissible(big, 1));  // below |lambda| - m
}

TEST_CASE("inadmissible degree is an error, not a silent zero") {
    CHECK_THROWS_AS(xhermite(make_xhermite(Partition({1, 1}), 2), Method::Wronskian),
                    std::invalid_argument);
    CHECK_THROWS_AS(xlaguerre(make_lag3(2, 2, Rational(-1, 2)), Method::Product),
                    std::invalid_argument);
    CHECK_THROWS_AS(xlaguerre(make_lag1(3, 2, Rational(1)), Method::Product),
                    std::invalid_argument);
}

TEST_CASE("type-I values") {
    auto s = make_lag1(1, 1, Rational(1));
    CHECK(xlaguerre(s, Method::Product) == make({Rational(2), Rational(1)}));
    CHECK(xlaguerre(s, Method::Integral) == make({Rational(2), Rational(1)}));
}

TEST_CASE("type-II values") {
    auto s = make_lag2(1, 1, Rational(2));
    CHECK(xlaguerre(s, Method::Product) == make({Rational(6), Rational(2)}));
    CHECK(xlaguerre(s, Method::Integral) == make({Rational(6), Rational(2)}));
}

TEST_CASE("type-III values") {
    CHECK(xlaguerre(make_lag3(1, 0, Rational(-1, 2)), Method::Product) ==
          PolyQ::constant(Rational(1)));
    CHECK(xlaguerre(make_lag3(1, 0, Rational(-1, 2)), Method::Integral) ==
          PolyQ::constant(Rational(1)));
    auto s = make_lag3(1, 2, Rational(-1, 2));
    PolyQ expected = make({Rational(-1, 4), Rational(1), Rational(1)});
    CHECK(xlaguerre(s, Method::Product) == expected);
    CHECK(xlaguerre(s, Method::Integral) == expected);
}

TEST_CASE("exceptional jacobi values") {
    // At n = m the first product term vanishes with the negative-degree
    // factor and the formula collapses to a single classical polynomial.
    Rational a(3, 2), b(1, 2);
    auto s = make_xjacobi(1, 1, a, b);
    PolyQ expected =
        jacobi(1, -a - Rational(2), b).scaled(-a / (a + Rational(1)));
    CHECK(xjacobi(s, Method::Product) == expected);
    CHECK(xjacobi(s, Method::Integral) == expected);
    CHECK(xjacobi(s, Method::Product) == make({Rational(6, 5), Rational(3, 10)}));
}

TEST_CASE("exceptional hermite values") {
    auto n3 = make_hermite11(3);
    PolyQ expected3 = make({Rational(0), Rational(192), Rational(0), Rational(128)});
    CHECK(xhermite(n3, Method::ClosedForm) == expected3);
    CHECK(xhermite(n3, Method::Wronskian) == expected3);
    CHECK(xhermite(n3, Method::Integral) == expected3);

    auto n4 = make_hermite11(4);
    PolyQ h4 = xhermite(n4, Method::Wronskian);
    CHECK(h4(Rational(0)) == Rational(-192));
    CHECK(h4 == xhermite(n4, Method::ClosedForm));
    CHECK(h4 == xhermite(n4, Method::Integral));
}

TEST_CASE("degrees match across the grid") {
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 10; ++n) {
            CHECK(xlaguerre(make_lag1(m, n, Rational(1, 2)), Method::Product).degree() == n);
            CHECK(xlaguerre(make_lag2(m, n, Rational(m) + Rational(1, 3)), Method::Product)
                      .degree() == n);
            if (n > m)
                CHECK(xlaguerre(make_lag3(m, n, Rational(-1, 2)), Method::Product).degree() ==
                      n);
            auto sj = make_xjacobi(m, n, Rational(m) + Rational(1, 3), Rational(1, 2));
            CHECK(xjacobi(sj, Method::Product).degree() == n);
        }
    for (auto lam : {Partition({2, 1}), Partition({2, 2})})
        for (int n = lam.weight() - lam.length(); n <= 9; ++n)
            if (hermite_degree_admissible(lam, n))
                CHECK(xhermite(make_xhermite(lam, n), Method::Wronskian).degree() == n);
}

TEST_CASE("type-I derivative identity") {
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 8; ++n)
            for (Rational a : {Rational(1, 2), Rational(5, 2)}) {
                PolyQ y = xlaguerre(make_lag1(m, n, a), Method::Product);
                PolyQ neg_m = laguerre(m, a - Rational(1)).compose_affine(Rational(0), Rational(-1));
                PolyQ neg_m1 =
                    laguerre(m - 1, a + Rational(1)).compose_affine(Rational(0), Rational(-1));
                PolyQ rhs = neg_m1 * laguerre(n - m, a - Rational(1)) -
                            neg_m * laguerre(n - m - 1, a + Rational(1));
                CHECK(y.derivative() == rhs);
            }
}

TEST_CASE("hermite derivative identity") {
    PolyQ h11 = generalized_hermite(Partition({1, 1}));
    for (int n = 3; n <= 10; ++n) {
        PolyQ y = xhermite(make_hermite11(n), Method::Wronskian);
        PolyQ rhs = (h11 * hermite(n - 3)).scaled(Rational(8 * n * (n - 1) * (n - 2)));
        CHECK(y.derivative() == rhs);
    }
}

TEST_CASE("first-order relation residuals vanish") {
    auto r1 = ode_residual(make_lag1(1, 1, Rational(1)));
    CHECK(r1.tag == OdeTag::Lag1FirstOrder);
    CHECK(r1.residual.is_zero());
    CHECK(r1.witness == make({Rational(2), Rational(2)}));  // 2 (x+1)

    auto r2 = ode_residual(make_lag2(1, 2, Rational(2)));
    CHECK(r2.tag == OdeTag::Lag2FirstOrder);
    CHECK(r2.residual.is_zero());

    auto rj = ode_residual(make_xjacobi(2, 5, Rational(7, 3), Rational(1, 2)));
    CHECK(rj.tag == OdeTag::JacobiFirstOrder);
    CHECK(rj.residual.is_zero());
}

TEST_CASE("hermite quotient relation") {
    auto rel = ode_residual(make_hermite11(3));
    CHECK(rel.tag == OdeTag::HermiteQuotient);
    CHECK(rel.residual.is_zero());
    PolyQ h = generalized_hermite(Partition({1, 1}));
    PolyQ y = xhermite(make_hermite11(3), Method::Wronskian);
    PolyQ lhs = (h.derivative() * (kX * y - y.derivative())).scaled(Rational(2)) +
                h.derivative(2) * y;
    CHECK(rel.witness * h == lhs);
    CHECK_FALSE(rel.witness.is_zero());

    // General partitions: only the divisibility is claimed.
    for (auto lam : {Partition({2, 1}), Partition({3, 1}), Partition({2, 2})})
        for (int n = std::max(0, lam.weight() - lam.length()); n <= 8; ++n)
            if (hermite_degree_admissible(lam, n))
                CHECK(ode_residual(make_xhermite(lam, n)).residual.is_zero());
}

TEST_CASE("method dispatch guards") {
    CHECK_THROWS_AS(xlaguerre(make_lag1(1, 2, Rational(1)), Method::Wronskian),
                    std::invalid_argument);
    CHECK_THROWS_AS(xhermite(make_xhermite(Partition({2, 1}), 3), Method::ClosedForm),
                    std::invalid_argument);
    CHECK_THROWS_AS(xjacobi(make_lag1(1, 2, Rational(1)), Method::Product),
                    std::invalid_argument);
}

TEST_CASE("third-derivative form of the hermite integrand coincides") {
    // The integrand and constant admit a second, equivalent reading through
    // the third derivative; both collapse to the same polynomial data.
    for (int n = 3; n <= 9; ++n) {
        PolyQ h11 = generalized_hermite(Partition({1, 1}));
        CHECK(hermite(n).derivative(3) ==
              hermite(n - 3).scaled(Rational(8 * n * (n - 1) * (n - 2))));
        Rational lhs = hermite(n - 1).derivative()(Rational(0)) * Rational(8 * (n - 2));
        Rational rhs = hermite(n - 2)(Rational(0)) * Rational(16 * (n - 1) * (n - 2));
        CHECK(lhs == rhs);
    }
}
