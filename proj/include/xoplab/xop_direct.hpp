#pragma once

#include "xoplab/xop_spec.hpp"

namespace xoplab {

// Evaluation routes. Product and the Wronskian are the defining formulas;
// Integral reconstructs the polynomial from its first-order relation by
// exact antiderivative manipulation; ClosedForm is the two-term Hermite
// expression available for the (1,1) partition.
enum class Method { Product, Integral, Wronskian, ClosedForm };

const char* to_string(Method m);
std::optional<Method> parse_method(const std::string& name);

// Exceptional Laguerre polynomial (types I, II, III).
//   Product:  the two-term bilinear classical-Laguerre formulas.
//   Integral: exact closed-form integration --
//     type I:  (a+n) * sum_k c_k x^k/(k+a), with sum c_k t^k the weighted
//              integrand L_m^(a-1)(-t) L_{n-m}^(a-1)(t);
//     type II: -(a+n+1-2m) * sum_j p^(j)(x), p = L_m^(-a-1) L_{n-m}^(a+1)
//              (integration by parts telescopes exactly);
//     type III: n * int_0^x L_{n-m-1}^(a+1) L_m^(-a-1)(-t) dt plus the
//              constant (m+1) C(n-m+a, n-m-1) C(m-a-1, m+1).
PolyQ xlaguerre(const XopSpec& spec, Method method);

// Exceptional Jacobi polynomial. Product is the bilinear classical-Jacobi
// formula; Integral expands the integrand in powers of (t+1), maps
// (t+1)^k -> (x+1)^k/(k+beta), and applies the sign/ratio prefactor.
PolyQ xjacobi(const XopSpec& spec, Method method);

// Exceptional Hermite polynomial. Wronskian accepts any admissible
// (partition, n); ClosedForm and Integral require the (1,1) partition with
// n >= 3. A degree outside the admissible set is an error, never a silent
// zero return.
PolyQ xhermite(const XopSpec& spec, Method method);

// Dispatch on spec.family.
PolyQ xop_direct(const XopSpec& spec, Method method);

// Methods that apply to a family, defining method order for `compare`.
std::vector<Method> methods_for(XopFamily family);

enum class OdeTag { Lag1FirstOrder, Lag2FirstOrder, JacobiFirstOrder, HermiteQuotient };

// First-order relation residual. `residual` must be the zero polynomial;
// `witness` carries the right-hand side object (the classical product, or
// the quotient polynomial for the Hermite divisibility relation).
struct OdeRelation {
    OdeTag tag;
    PolyQ residual;
    PolyQ witness;
};

// Exact residual of the family's first-order relation:
//   type I Laguerre:   x y' + a y   = (a+n) L_{n-m}^(a-1)(x) L_m^(a-1)(-x)
//   type II Laguerre:  y' - y       = (a+n+1-2m) L_m^(-a-1) L_{n-m}^(a+1)
//   Jacobi:            (1+x) y' + b y = prefactor * P_{n-m}^(a+1,b-1) P_m^(-a-1,b-1)
//   Hermite:           2 H_l'(x y - y') + H_l'' y = Q_{n,l} H_l  (exact division)
OdeRelation ode_residual(const XopSpec& spec);

}  // namespace xoplab
