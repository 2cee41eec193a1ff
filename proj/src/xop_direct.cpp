#include "xoplab/xop_direct.hpp"

#include <stdexcept>

namespace xoplab {

namespace {

void require_valid(const XopSpec& spec) {
    if (auto err = validate(spec)) throw std::invalid_argument(*err);
}

PolyQ negate_argument(const PolyQ& p) {
    return p.compose_affine(Rational(0), Rational(-1));
}

const PolyQ kX = PolyQ::identity();

}  // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::Product: return "product";
        case Method::Integral: return "integral";
        case Method::Wronskian: return "wronskian";
        case Method::ClosedForm: return "closed_form";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "product") return Method::Product;
    if (name == "integral") return Method::Integral;
    if (name == "wronskian") return Method::Wronskian;
    if (name == "closed_form") return Method::ClosedForm;
    return std::nullopt;
}

std::vector<Method> methods_for(XopFamily family) {
    switch (family) {
        case XopFamily::LagI:
        case XopFamily::LagII:
        case XopFamily::LagIII:
        case XopFamily::Jacobi:
            return {Method::Product, Method::Integral};
        case XopFamily::Hermite11:
            return {Method::Wronskian, Method::ClosedForm, Method::Integral};
        case XopFamily::HermiteGeneral:
            return {Method::Wronskian};
    }
    return {};
}

namespace {

PolyQ xlaguerre_product(const XopSpec& s) {
    const int m = s.m, n = s.n;
    const Rational& a = s.alpha;
    switch (s.family) {
        case XopFamily::LagI:
            return negate_argument(laguerre(m, a)) * laguerre(n - m, a - Rational(1)) +
                   negate_argument(laguerre(m, a - Rational(1))) * laguerre(n - m - 1, a);
        case XopFamily::LagII:
            return kX * laguerre(m, -a - Rational(1)) * laguerre(n - m - 1, a + Rational(2)) +
                   (laguerre(m, -a - Rational(2)) * laguerre(n - m, a + Rational(1)))
                       .scaled(Rational(m) - a - Rational(1));
        case XopFamily::LagIII:
            if (n == 0) return PolyQ::constant(Rational(1));
            return kX * laguerre(n - m - 2, a + Rational(2)) *
                       negate_argument(laguerre(m, -a - Rational(1))) +
                   (negate_argument(laguerre(m + 1, -a - Rational(2))) *
                    laguerre(n - m - 1, a + Rational(1)))
                       .scaled(Rational(m + 1));
        default: break;
    }
    throw std::logic_error("xlaguerre_product: not a Laguerre family");
}

PolyQ xlaguerre_integral(const XopSpec& s) {
    const int m = s.m, n = s.n;
    const Rational& a = s.alpha;
    switch (s.family) {
        case XopFamily::LagI: {
            // Weighted integrand against t^(a-1): monomial-wise
            // antiderivative, x^(-a) prefactor cancelled analytically.
            PolyQ q = negate_argument(laguerre(m, a - Rational(1))) *
                      laguerre(n - m, a - Rational(1));
            std::vector<Rational> out(q.coeffs().size());
            for (std::size_t k = 0; k < q.coeffs().size(); ++k)
                out[k] = (a + Rational(n)) * q.coeff(k) / (Rational(k) + a);
            return PolyQ(std::move(out));
        }
        case XopFamily::LagII: {
            // exp(x) * int_x^inf exp(-t) p(t) dt = sum_j p^(j)(x), exactly.
            PolyQ p = laguerre(m, -a - Rational(1)) * laguerre(n - m, a + Rational(1));
            PolyQ sum, d = p;
            while (!d.is_zero()) {
                sum += d;
                d = d.derivative();
            }
            return sum.scaled(-(a + Rational(n) + Rational(1) - Rational(2 * m)));
        }
        case XopFamily::LagIII: {
            if (n == 0) return PolyQ::constant(Rational(1));
            PolyQ integrand = laguerre(n - m - 1, a + Rational(1)) *
                              negate_argument(laguerre(m, -a - Rational(1)));
            Rational constant = Rational(m + 1) *
                                gen_binomial(Rational(n - m) + a,
                                             static_cast<unsigned>(n - m - 1)) *
                                gen_binomial(Rational(m) - a - Rational(1),
                                             static_cast<unsigned>(m + 1));
            return integrand.antiderivative().scaled(Rational(n)) +
                   PolyQ::constant(constant);
        }
        default: break;
    }
    throw std::logic_error("xlaguerre_integral: not a Laguerre family");
}

}  // namespace

PolyQ xlaguerre(const XopSpec& spec, Method method) {
    if (spec.family != XopFamily::LagI && spec.family != XopFamily::LagII &&
        spec.family != XopFamily::LagIII)
        throw std::invalid_argument("xlaguerre: spec is not a Laguerre family");
    require_valid(spec);
    switch (method) {
        case Method::Product: return xlaguerre_product(spec);
        case Method::Integral: return xlaguerre_integral(spec);
        default:
            throw std::invalid_argument("xlaguerre: method must be product or integral");
    }
}

PolyQ xjacobi(const XopSpec& spec, Method method) {
    if (spec.family != XopFamily::Jacobi)
        throw std::invalid_argument("xjacobi: spec is not the Jacobi family");
    require_valid(spec);
    const int m = spec.m, n = spec.n;
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;
    const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);

    switch (method) {
        case Method::Product: {
            PolyQ first = (kX - PolyQ::constant(Rational(1))) *
                          jacobi(m, -a - Rational(1), b - Rational(1)) *
                          jacobi(n - m - 1, a + Rational(2), b);
            first = first.scaled((Rational(1) + a + b + Rational(n - m)) / Rational(2));
            PolyQ second = (jacobi(m, -a - Rational(2), b) *
                            jacobi(n - m, a + Rational(1), b - Rational(1)))
                               .scaled(a + Rational(1 - m));
            return (first + second).scaled(sign / (a + Rational(1) + Rational(n - m)));
        }
        case Method::Integral: {
            // Expand the integrand in powers of (t+1); each (t+1)^k picks up
            // a 1/(k+beta) under the weighted antiderivative.
            PolyQ q = jacobi(m, -a - Rational(1), b - Rational(1)) *
                      jacobi(n - m, a + Rational(1), b - Rational(1));
            std::vector<Rational> e = q.shift_basis(Rational(-1));
            PolyQ acc;
            PolyQ basis = PolyQ::constant(Rational(1));
            PolyQ x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
            for (std::size_t k = 0; k < e.size(); ++k) {
                acc += basis.scaled(e[k] / (Rational(k) + b));
                if (k + 1 < e.size()) basis *= x_plus_1;
            }
            Rational pre = sign * (b + Rational(n)) *
                           (a + Rational(n) - Rational(2 * m) + Rational(1)) /
                           (a + Rational(n) - Rational(m) + Rational(1));
            return acc.scaled(pre);
        }
        default:
            throw std::invalid_argument("xjacobi: method must be product or integral");
    }
}

PolyQ xhermite(const XopSpec& spec, Method method) {
    if (spec.family != XopFamily::Hermite11 && spec.family != XopFamily::HermiteGeneral)
        throw std::invalid_argument("xhermite: spec is not a Hermite family");
    require_valid(spec);
    const Partition& lam =
        spec.family == XopFamily::Hermite11 ? Partition({1, 1}) : spec.lambda;
    const int n = spec.n;

    switch (method) {
        case Method::Wronskian: {
            if (!hermite_degree_admissible(lam, n))
                throw std::invalid_argument("xhermite: degree n=" + std::to_string(n) +
                                            " not admissible for " + lam.to_string());
            std::vector<PolyQ> factors = generalized_hermite_factors(lam);
            factors.push_back(hermite(n - lam.weight() + lam.length()));
            return wronskian(factors);
        }
        case Method::ClosedForm: {
            if (spec.family != XopFamily::Hermite11)
                throw std::invalid_argument("xhermite: closed_form needs the (1,1) partition");
            PolyQ inner(std::vector<Rational>{Rational(n - 2), Rational(0), Rational(2 * n)});
            PolyQ p = (kX * hermite(n - 1)).scaled(Rational(-2)) + inner * hermite(n - 2);
            return p.scaled(Rational(16 * (n - 1)));
        }
        case Method::Integral: {
            if (spec.family != XopFamily::Hermite11)
                throw std::invalid_argument("xhermite: integral needs the (1,1) partition");
            PolyQ h11 = generalized_hermite(Partition({1, 1}));
            PolyQ body = (h11 * hermite(n - 3)).antiderivative();
            Rational constant =
                Rational(16 * (n - 1) * (n - 2)) * hermite(n - 2)(Rational(0));
            return body.scaled(Rational(8 * n * (n - 1) * (n - 2))) +
                   PolyQ::constant(constant);
        }
        default:
            throw std::invalid_argument("xhermite: method not applicable");
    }
}

PolyQ xop_direct(const XopSpec& spec, Method method) {
    switch (spec.family) {
        case XopFamily::LagI:
        case XopFamily::LagII:
        case XopFamily::LagIII:
            return xlaguerre(spec, method);
        case XopFamily::Jacobi:
            return xjacobi(spec, method);
        case XopFamily::Hermite11:
        case XopFamily::HermiteGeneral:
            return xhermite(spec, method);
    }
    throw std::logic_error("xop_direct: unknown family");
}

OdeRelation ode_residual(const XopSpec& spec) {
    require_valid(spec);
    const int m = spec.m, n = spec.n;
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;
    OdeRelation rel{OdeTag::Lag1FirstOrder, PolyQ(), PolyQ()};

    switch (spec.family) {
        case XopFamily::LagI: {
            PolyQ y = xlaguerre(spec, Method::Product);
            rel.tag = OdeTag::Lag1FirstOrder;
            rel.witness = (laguerre(n - m, a - Rational(1)) *
                           negate_argument(laguerre(m, a - Rational(1))))
                              .scaled(a + Rational(n));
            rel.residual = kX * y.derivative() + y.scaled(a) - rel.witness;
            return rel;
        }
        case XopFamily::LagII: {
            PolyQ y = xlaguerre(spec, Method::Product);
            rel.tag = OdeTag::Lag2FirstOrder;
            rel.witness = (laguerre(m, -a - Rational(1)) * laguerre(n - m, a + Rational(1)))
                              .scaled(a + Rational(n + 1 - 2 * m));
            rel.residual = y.derivative() - y - rel.witness;
            return rel;
        }
        case XopFamily::LagIII:
            // The type-III derivative factors directly; there is no
            // residual of this shape to check beyond path agreement.
            throw std::invalid_argument(
                "ode_residual: type-III Laguerre has no first-order relation here");
        case XopFamily::Jacobi: {
            PolyQ y = xjacobi(spec, Method::Product);
            rel.tag = OdeTag::JacobiFirstOrder;
            Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
            Rational pre = sign * (b + Rational(n)) * (a + Rational(n - 2 * m + 1)) /
                           (a + Rational(n - m + 1));
            rel.witness = (jacobi(n - m, a + Rational(1), b - Rational(1)) *
                           jacobi(m, -a - Rational(1), b - Rational(1)))
                              .scaled(pre);
            PolyQ one_plus_x(std::vector<Rational>{Rational(1), Rational(1)});
            rel.residual = one_plus_x * y.derivative() + y.scaled(b) - rel.witness;
            return rel;
        }
        case XopFamily::Hermite11:
        case XopFamily::HermiteGeneral: {
            const Partition& lam =
                spec.family == XopFamily::Hermite11 ? Partition({1, 1}) : spec.lambda;
            PolyQ y = xhermite(spec, Method::Wronskian);
            PolyQ h = generalized_hermite(lam);
            PolyQ lhs = (h.derivative() * (kX * y - y.derivative())).scaled(Rational(2)) +
                        h.derivative(2) * y;
            PolyQ quotient, remainder;
            poly_divmod(lhs, h, quotient, remainder);
            rel.tag = OdeTag::HermiteQuotient;
            rel.witness = quotient;
            rel.residual = remainder;
            return rel;
        }
    }
    throw std::logic_error("ode_residual: unknown family");
}

}  // namespace xoplab
