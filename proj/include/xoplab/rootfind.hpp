#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xoplab/classical.hpp"
#include "xoplab/poly.hpp"
#include "xoplab/report.hpp"

namespace xoplab {

struct RootfindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered set of complex nodes (zeros of some polynomial). Construction
// sorts canonically: ascending real part, ties broken by imaginary part.
// Tests and the permutation-invariance check may reorder explicitly.
struct NodeSet {
    std::vector<Complex> points;
    std::string source;
    double tol = 1e-13;

    std::size_t size() const { return points.size(); }
    double min_pairwise_gap() const;
    double max_abs() const;
    bool all_real(double imag_tol) const;
    NodeSet permuted(const std::vector<int>& perm) const;
    NodeSet concat(const NodeSet& other) const;  // union, re-canonicalized
};

void canonical_sort(std::vector<Complex>& pts);

// Degree cap for the general root finder: XOPLAB_MAX_DEGREE if set,
// hard-capped at 30.
int max_rootfind_degree();

// All zeros of p (with multiplicity) by Aberth-Ehrlich simultaneous
// iteration, each polished by Newton steps. Initial guesses sit on a circle
// of radius 1 + max |c_i / c_deg|. Throws RootfindError on non-convergence
// or when a computed root fails the residual certificate
// |p(z)| <= tol * max|c_i| * max(1,|z|)^deg.
NodeSet zeros(const PolyC& p, double tol = 1e-13, std::string source = "");
NodeSet zeros(const PolyQ& p, double tol = 1e-13, std::string source = "");

enum class ClassicalFamily { Laguerre, Jacobi, Hermite };

// Zeros of a classical-parameter orthogonal polynomial via the symmetric
// tridiagonal eigenvalue problem of its three-term recurrence. Requires
// alpha > -1 (Laguerre), alpha, beta > -1 (Jacobi).
NodeSet classical_zeros(ClassicalFamily family, int n, const Rational& alpha = Rational(0),
                        const Rational& beta = Rational(0));

// Zero-location checks: Laguerre zeros positive/simple for alpha > -1,
// negative-parameter Laguerre zeros simple and outside (0, inf) for
// alpha > m-1, Jacobi zeros inside (-1,1) for alpha, beta > -1, and the
// negative-parameter Jacobi exclusion from (-1,1). Cases whose hypotheses
// fail are reported SKIPPED.
void check_zero_theorems(int m, const Rational& alpha, const Rational& beta,
                         VerificationReport& out);

// Even partitions keep their Wronskians away from the real line; checks all
// even partitions of weight <= max_weight.
void check_even_partition_zero_free(int max_weight, VerificationReport& out);

// Numeric probe only (nothing asserted): minimum pairwise gap among the
// nonzero zeros of the generalized Hermite polynomial.
double genhermite_nonzero_gap_probe(const Partition& lambda);

}  // namespace xoplab
