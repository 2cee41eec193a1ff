#include "doctest.h"

#include "xoplab/classical.hpp"

using namespace xoplab;

namespace {
PolyQ make(std::vector<Rational> c) { return PolyQ(std::move(c)); }
}

TEST_CASE("laguerre constructor") {
    CHECK(laguerre(0, Rational(7, 3)) == PolyQ::constant(Rational(1)));
    CHECK(laguerre(1, Rational(0)) == make({Rational(1), Rational(-1)}));
    CHECK(laguerre(2, Rational(1)) == make({Rational(3), Rational(-3), Rational(1, 2)}));
    for (int n = 0; n <= 10; ++n)
        for (Rational a : {Rational(1, 2), Rational(7, 3), Rational(-5, 2), Rational(-11)}) {
            PolyQ p = laguerre(n, a);
            CHECK(p.degree() == n);
            Rational lead = Rational(n % 2 == 0 ? 1 : -1) / rational_factorial(n);
            CHECK(p.leading() == lead);
            CHECK(p(Rational(0)) == gen_binomial(a + Rational(n), n));
        }
}

TEST_CASE("jacobi constructor") {
    CHECK(jacobi(0, Rational(5), Rational(-7, 2)) == PolyQ::constant(Rational(1)));
    CHECK(jacobi(1, Rational(0), Rational(0)) == make({Rational(0), Rational(1)}));
    for (Rational a : {Rational(1, 2), Rational(7, 3)})
        for (Rational b : {Rational(1), Rational(5, 2)}) {
            PolyQ expected =
                make({a + Rational(1) - (a + b + Rational(2)) / Rational(2),
                      (a + b + Rational(2)) / Rational(2)});
            CHECK(jacobi(1, a, b) == expected);
        }
}

TEST_CASE("jacobi degree drop is detected") {
    // With a+b+n in {-1, ..., -n} the leading coefficient vanishes.
    Rational a(-3, 2), b(-3, 2);
    CHECK_FALSE(jacobi_degree_is_full(2, a, b));
    CHECK(jacobi(2, a, b).degree() < 2);
    CHECK(jacobi_degree_is_full(2, Rational(1, 2), Rational(1, 2)));
    CHECK(jacobi(2, Rational(1, 2), Rational(1, 2)).degree() == 2);
}

TEST_CASE("hermite constructor") {
    CHECK(hermite(0) == PolyQ::constant(Rational(1)));
    CHECK(hermite(1) == make({Rational(0), Rational(2)}));
    CHECK(hermite(2) == make({Rational(-2), Rational(0), Rational(4)}));
    CHECK(hermite(3) == make({Rational(0), Rational(-12), Rational(0), Rational(8)}));
    for (int n = 0; n <= 12; ++n) {
        PolyQ h = hermite(n);
        CHECK(h.degree() == n);
        Rational lead(1);
        for (int i = 0; i < n; ++i) lead *= Rational(2);
        CHECK(h.leading() == lead);
    }
}

TEST_CASE("generalized hermite") {
    CHECK(generalized_hermite(Partition({1, 1})) ==
          make({Rational(4), Rational(0), Rational(8)}));
    CHECK(generalized_hermite(Partition({1})) == hermite(1));
    CHECK(generalized_hermite(Partition({2, 2})).degree() == 4);
    for (auto lam : {Partition({3}), Partition({2, 1}), Partition({3, 2, 1}),
                     Partition({4, 4}), Partition({2, 2, 1, 1})})
        CHECK(generalized_hermite(lam).degree() == lam.weight());
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("3,2,1").weight() == 6);
    CHECK(Partition({2, 2, 1, 1}).is_even());
    CHECK_FALSE(Partition({2, 1, 1}).is_even());
    CHECK_FALSE(Partition({3, 1}).is_even());
    CHECK(Partition({1, 1}).to_string() == "(1,1)");
}

TEST_CASE("partial sums") {
    CHECK(exp_partial_sum(0) == PolyQ::constant(Rational(1)));
    CHECK(exp_partial_sum(2) == make({Rational(1), Rational(1), Rational(1, 2)}));
    for (int n = 0; n <= 10; ++n) {
        Rational sign(n % 2 == 0 ? 1 : -1);
        CHECK(exp_partial_sum(n) == laguerre(n, Rational(-n - 1)).scaled(sign));
    }
    Rational beta(5, 2);
    CHECK(r_partial_sum(0, beta) == PolyQ::constant(Rational(1)));
    CHECK(r_partial_sum(1, beta) == make({Rational(1), -beta}));
    for (int n = 0; n <= 8; ++n)
        for (Rational b : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
            Rational sign(n % 2 == 0 ? 1 : -1);
            PolyQ shifted =
                jacobi(n, Rational(-n - 1), b).compose_affine(Rational(1), Rational(2));
            CHECK(r_partial_sum(n, b) == shifted.scaled(sign));
        }
}

TEST_CASE("constructors are deterministic") {
    CHECK(laguerre(9, Rational(7, 3)) == laguerre(9, Rational(7, 3)));
    CHECK(jacobi(8, Rational(7, 3), Rational(5, 2)) ==
          jacobi(8, Rational(7, 3), Rational(5, 2)));
    CHECK(generalized_hermite(Partition({3, 2, 1})) ==
          generalized_hermite(Partition({3, 2, 1})));
}

TEST_CASE("classical identity suite is exactly zero") {
    VerificationReport report;
    report.suite = "unit";
    check_classical_identities(
        10, {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)},
        {Rational(1, 2), Rational(1), Rational(5, 2)}, report);
    Totals t = report.totals();
    CHECK(t.fail == 0);
    CHECK(t.pass == t.count());
    for (const auto& c : report.cases) CHECK(c.residual == "exact-zero");
    CHECK_THROWS_AS(check_classical_identities(1, {}, {}, report), std::invalid_argument);
}
