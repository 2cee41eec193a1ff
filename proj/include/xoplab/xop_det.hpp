#pragma once

#include "xoplab/rootfind.hpp"
#include "xoplab/xop_spec.hpp"

namespace xoplab {

// Raised when a determinantal evaluation declines to proceed (degenerate
// node set or hopeless conditioning); distinct from a wrong answer.
struct RefusalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One determinantal formula, ready to evaluate: k-1 node power rows, a
// polynomial last row, and the scalar dressing. The prefactor already
// includes the reciprocal Vandermonde factor, matching the stored node
// order; the additive constant covers the families whose determinant only
// reaches degree n-1.
struct DetAssembly {
    NodeSet nodes;
    std::vector<PolyC> last_row;
    Complex prefactor{1.0, 0.0};
    Complex additive_constant{0.0, 0.0};
    bool multiply_by_x = false;
    int size = 0;  // k = len(last_row) = len(nodes) + 1
};

// prod_{i<j} (z_j - z_i) in the stored order of the node set.
Complex vandermonde_product(const NodeSet& nodes);

// Determinant of the matrix whose first k-1 rows are [1, z, ..., z^{k-1}]
// over the nodes and whose last row holds polynomials, expanded along that
// last row; the numeric minors go through LU with partial pivoting in
// extended precision. Refuses on duplicate-ish nodes or when a minor falls
// below 1e-12 of its Hadamard bound.
PolyC last_row_det(const NodeSet& nodes, const std::vector<PolyC>& last_row);

// Assemble the family's determinantal formula for a valid spec:
//  - type-I Laguerre:  negated zeros of L_m^(a-1) plus zeros of
//    L_{n-m}^(a-1); last row x^k/(k+a).
//  - type-II Laguerre: zeros of L_m^(-a-1) plus zeros of L_{n-m}^(a+1);
//    last row k! E_k(x).
//  - type-III Laguerre: negated zeros of L_m^(-a-1) plus zeros of
//    L_{n-m-1}^(a+1); last row x^k/(k+1); multiplied by x and shifted by
//    the (m+1) C(n-m+a, n-m-1) C(m-a-1, m+1) constant.
//  - Jacobi: zeros of P_m^(-a-1,b-1) plus zeros of P_{n-m}^(a+1,b-1); last
//    row (-1)^k k!/b^(k+1) R_k(x); Gamma-ratio prefactor evaluated as exact
//    rising factorials.
//  - (1,1)-Hermite: {i/sqrt2, -i/sqrt2} plus zeros of H_{n-3}; last row
//    x^k/(k+1); multiplied by x and shifted by 16(n-1)(n-2) H_{n-2}(0).
DetAssembly build_det_assembly(const XopSpec& spec);

// Same assembly with the nodes in a caller-chosen order (the prefactor's
// Vandermonde factor follows the order).
DetAssembly reorder_assembly(const DetAssembly& assembly, const std::vector<int>& perm);

PolyC evaluate_det_assembly(const DetAssembly& assembly);

// The full determinantal route: assemble and evaluate.
PolyC det_xop(const XopSpec& spec);

// Evaluating with permuted nodes must reproduce the polynomial: determinant
// and Vandermonde factor flip sign together.
bool permutation_invariance(const XopSpec& spec, const std::vector<int>& perm,
                            double rel_tol = 1e-10);

// Smallest singular value of the first-order-relation matrix (node rows of
// the relation's row pattern, last row [1, x, ..., x^{k-1}]) at the point x.
// At a zero of the target polynomial the matrix is singular: the
// coefficient vector sits in its kernel. When norm_out is given it receives
// the Frobenius norm of the matrix.
double kernel_matrix_smallest_singular(const XopSpec& spec, const Complex& x,
                                       double* norm_out = nullptr);

// Max coefficient-wise relative deviation between an approximate complex
// polynomial and an exact rational one (absolute deviation against the
// coefficient scale where the exact coefficient vanishes).
double coefficientwise_relative_error(const PolyC& approx, const PolyQ& exact);

// Max deviation relative to the exact polynomial's largest coefficient; the
// metric the conditioning guard can certify at any degree.
double scale_relative_error(const PolyC& approx, const PolyQ& exact);

}  // namespace xoplab
