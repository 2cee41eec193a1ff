#include "xoplab/xop_det.hpp"

#include <algorithm>
#include <cmath>

#include "xoplab/xop_direct.hpp"

namespace xoplab {

namespace {

using LC = std::complex<long double>;

constexpr double kNodeGapFactor = 1e-8;
// Refuse when the propagated rounding-error bound on the determinant
// exceeds this fraction of the result's coefficient scale. (A per-minor
// floor against the Hadamard row bound is useless here: that bound
// overestimates Vandermonde minors by dozens of orders of magnitude.)
constexpr double kDetErrorBudget = 1e-8;

void require_distinct(const NodeSet& nodes) {
    if (nodes.size() < 2) return;
    double threshold = kNodeGapFactor * (1.0 + nodes.max_abs());
    if (nodes.min_pairwise_gap() <= threshold)
        throw RefusalError("node set degenerate: min gap " +
                           std::to_string(nodes.min_pairwise_gap()) + " below " +
                           std::to_string(threshold));
}

// Elementary symmetric polynomials of the nodes, with the all-absolute
// companion values that bound the accumulated rounding error. The minor of
// the node power matrix with column j deleted factors exactly as
// e_{k-1-j}(nodes) * Vandermonde(nodes), which products of node differences
// evaluate stably. (LU on the raw power matrix is not an option: one
// far-out node -- the exceptional Jacobi sets produce them -- inflates the
// growth factor past 1e18 and leaves the minors with three digits.)
void elementary_symmetric(const std::vector<Complex>& nodes, std::vector<LC>& e,
                          std::vector<long double>& e_abs) {
    const std::size_t r = nodes.size();
    e.assign(r + 1, LC(0.0L, 0.0L));
    e_abs.assign(r + 1, 0.0L);
    e[0] = LC(1.0L, 0.0L);
    e_abs[0] = 1.0L;
    std::size_t used = 0;
    for (const auto& zd : nodes) {
        LC z(zd);
        long double az = std::abs(z);
        ++used;
        for (std::size_t i = used; i >= 1; --i) {
            e[i] += z * e[i - 1];
            e_abs[i] += az * e_abs[i - 1];
        }
    }
}

LC vandermonde_ld(const std::vector<Complex>& nodes) {
    LC prod(1.0L, 0.0L);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            prod *= LC(nodes[j]) - LC(nodes[i]);
    return prod;
}

}  // namespace

Complex vandermonde_product(const NodeSet& nodes) {
    require_distinct(nodes);
    LC prod(1.0L, 0.0L);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            prod *= LC(nodes.points[j]) - LC(nodes.points[i]);
    return Complex(static_cast<double>(prod.real()), static_cast<double>(prod.imag()));
}

PolyC last_row_det(const NodeSet& nodes, const std::vector<PolyC>& last_row) {
    const std::size_t k = last_row.size();
    if (nodes.size() + 1 != k)
        throw std::invalid_argument("last_row_det: need len(last_row) = len(nodes) + 1");
    require_distinct(nodes);

    std::vector<LC> e;
    std::vector<long double> e_abs;
    elementary_symmetric(nodes.points, e, e_abs);
    const LC vand = vandermonde_ld(nodes.points);
    const long double vmag = std::abs(vand);
    const long double eps_term =
        4.0L * k * k * std::numeric_limits<long double>::epsilon();

    // Expansion along the polynomial last row; the cofactor of entry
    // (k-1, j) is (-1)^(k-1+j) e_{k-1-j}(nodes) Vandermonde(nodes).
    PolyC acc;
    std::vector<long double> coeff_err;
    for (std::size_t j = 0; j < k; ++j) {
        if (last_row[j].is_zero()) continue;
        LC minor = e[k - 1 - j] * vand;
        const bool negative = ((k - 1 + j) % 2) != 0;
        Complex factor(static_cast<double>(minor.real()), static_cast<double>(minor.imag()));
        if (negative) factor = -factor;
        acc += last_row[j].scaled(factor);
        const long double term_err = eps_term * e_abs[k - 1 - j] * vmag;
        const auto& lc = last_row[j].coeffs();
        if (coeff_err.size() < lc.size()) coeff_err.resize(lc.size(), 0.0L);
        for (std::size_t c = 0; c < lc.size(); ++c)
            coeff_err[c] += std::abs(lc[c]) * term_err;
    }

    // Conditioning guard: refuse when the propagated error bound is no
    // longer negligible against the result's own coefficient scale.
    long double scale = 0.0L;
    for (const auto& c : acc.coeffs())
        scale = std::max(scale, static_cast<long double>(std::abs(c)));
    long double worst_err = 0.0L;
    for (long double v : coeff_err) worst_err = std::max(worst_err, v);
    if (scale > 0.0L && worst_err > kDetErrorBudget * scale)
        throw RefusalError("determinant error bound " +
                           std::to_string(static_cast<double>(worst_err)) +
                           " exceeds budget at coefficient scale " +
                           std::to_string(static_cast<double>(scale)));
    return acc;
}

namespace {

NodeSet negated(const NodeSet& ns) {
    NodeSet out = ns;
    for (auto& z : out.points) z = -z;
    canonical_sort(out.points);
    out.source = "-(" + ns.source + ")";
    return out;
}

NodeSet laguerre_nodes(int n, const Rational& alpha) {
    if (n == 0) return NodeSet{{}, "laguerre(n=0)", 1e-13};
    if (alpha > Rational(-1)) return classical_zeros(ClassicalFamily::Laguerre, n, alpha);
    return zeros(laguerre(n, alpha), 1e-13,
                 "laguerre(n=" + std::to_string(n) + ",alpha=" + alpha.to_string() + ")");
}

NodeSet jacobi_nodes(int n, const Rational& alpha, const Rational& beta) {
    if (n == 0) return NodeSet{{}, "jacobi(n=0)", 1e-13};
    if (alpha > Rational(-1) && beta > Rational(-1))
        return classical_zeros(ClassicalFamily::Jacobi, n, alpha, beta);
    return zeros(jacobi(n, alpha, beta), 1e-13,
                 "jacobi(n=" + std::to_string(n) + ",alpha=" + alpha.to_string() +
                     ",beta=" + beta.to_string() + ")");
}

NodeSet hermite_nodes(int n) {
    if (n == 0) return NodeSet{{}, "hermite(n=0)", 1e-13};
    return classical_zeros(ClassicalFamily::Hermite, n);
}

std::vector<PolyC> monomial_row(int count, const Rational& denominator_shift) {
    // Entry k: x^k / (k + shift).
    std::vector<PolyC> row;
    row.reserve(count);
    for (int k = 0; k < count; ++k) {
        Rational c = Rational(1) / (Rational(k) + denominator_shift);
        row.push_back(PolyC::monomial(to_complex(c), static_cast<std::size_t>(k)));
    }
    return row;
}

}  // namespace

DetAssembly build_det_assembly(const XopSpec& spec) {
    if (auto err = validate(spec)) throw std::invalid_argument(*err);
    const int m = spec.m, n = spec.n;
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;

    DetAssembly out;
    switch (spec.family) {
        case XopFamily::LagI: {
            out.size = n + 1;
            out.nodes = negated(laguerre_nodes(m, a - Rational(1)))
                            .concat(laguerre_nodes(n - m, a - Rational(1)));
            out.last_row = monomial_row(n + 1, a);
            Rational c = Rational(a + Rational(n)) /
                         (rational_factorial(m) * rational_factorial(n - m));
            if ((n - m) % 2 != 0) c = -c;
            out.prefactor = to_complex(c) / vandermonde_product(out.nodes);
            break;
        }
        case XopFamily::LagII: {
            out.size = n + 1;
            out.nodes = laguerre_nodes(m, -a - Rational(1))
                            .concat(laguerre_nodes(n - m, a + Rational(1)));
            out.last_row.reserve(n + 1);
            for (int k = 0; k <= n; ++k)
                out.last_row.push_back(
                    to_complex(exp_partial_sum(k).scaled(rational_factorial(k))));
            // Constant fixed by matching leading coefficients against the
            // bilinear product formula:
            //   (-1)^(n+1) (1 - (m-a-1)/(n-m)) / (m! (n-m-1)!)
            // = (-1)^(n+1) (a+n+1-2m) / (m! (n-m)!),
            // the right-hand form also covering n = m.
            Rational c = (a + Rational(n + 1 - 2 * m)) /
                         (rational_factorial(m) * rational_factorial(n - m));
            if (n % 2 == 0) c = -c;
            out.prefactor = to_complex(c) / vandermonde_product(out.nodes);
            break;
        }
        case XopFamily::LagIII: {
            if (n == 0)
                throw std::invalid_argument(
                    "type-III determinantal formula requires n >= m+1");
            out.size = n;
            out.nodes = negated(laguerre_nodes(m, -a - Rational(1)))
                            .concat(laguerre_nodes(n - m - 1, a + Rational(1)));
            out.last_row = monomial_row(n, Rational(1));
            Rational c = Rational(n) / (rational_factorial(m) * rational_factorial(n - m - 1));
            if ((n - m - 1) % 2 != 0) c = -c;
            out.prefactor = to_complex(c) / vandermonde_product(out.nodes);
            out.multiply_by_x = true;
            Rational constant =
                Rational(m + 1) *
                gen_binomial(Rational(n - m) + a, static_cast<unsigned>(n - m - 1)) *
                gen_binomial(Rational(m) - a - Rational(1), static_cast<unsigned>(m + 1));
            out.additive_constant = to_complex(constant);
            break;
        }
        case XopFamily::Jacobi: {
            out.size = n + 1;
            out.nodes = jacobi_nodes(m, -a - Rational(1), b - Rational(1))
                            .concat(jacobi_nodes(n - m, a + Rational(1), b - Rational(1)));
            out.last_row.reserve(n + 1);
            for (int k = 0; k <= n; ++k) {
                Rational c = rational_factorial(k) / pochhammer(b, static_cast<unsigned>(k + 1));
                if (k % 2 != 0) c = -c;
                out.last_row.push_back(to_complex(r_partial_sum(k, b).scaled(c)));
            }
            // delta = a+1; the Gamma ratios collapse to rising factorials
            // because their arguments differ by integers.
            Rational delta = a + Rational(1);
            Rational num = gen_binomial(Rational(n), static_cast<unsigned>(m)) *
                           (Rational(n) + delta - Rational(2 * m)) *
                           pochhammer(b - delta + Rational(m), static_cast<unsigned>(m)) *
                           pochhammer(delta + b + Rational(n - m), static_cast<unsigned>(n - m)) *
                           (Rational(n) + b);
            Rational den = rational_factorial(n) * (delta + Rational(n - m));
            for (int i = 0; i < n; ++i) den *= Rational(2);
            Rational c = num / den;
            if (m % 2 != 0) c = -c;
            out.prefactor = to_complex(c) / vandermonde_product(out.nodes);
            break;
        }
        case XopFamily::Hermite11: {
            out.size = n;
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            NodeSet imag_pair;
            imag_pair.points = {Complex(0.0, -inv_sqrt2), Complex(0.0, inv_sqrt2)};
            imag_pair.source = "conjugate-pair(i/sqrt2)";
            imag_pair.tol = 1e-13;
            out.nodes = imag_pair.concat(hermite_nodes(n - 3));
            out.last_row = monomial_row(n, Rational(1));
            Rational c(n * (n - 1) * (n - 2));
            for (int i = 0; i < n + 3; ++i) c *= Rational(2);
            out.prefactor = to_complex(c) / vandermonde_product(out.nodes);
            out.multiply_by_x = true;
            Rational constant = Rational(16 * (n - 1) * (n - 2)) * hermite(n - 2)(Rational(0));
            out.additive_constant = to_complex(constant);
            break;
        }
        case XopFamily::HermiteGeneral:
            throw std::invalid_argument(
                "det_xop: determinantal formula covers the (1,1) Hermite partition only");
    }

    if (!std::isfinite(out.prefactor.real()) || !std::isfinite(out.prefactor.imag()) ||
        out.prefactor == Complex(0.0))
        throw RefusalError("det assembly prefactor not finite and nonzero");
    return out;
}

DetAssembly reorder_assembly(const DetAssembly& assembly, const std::vector<int>& perm) {
    DetAssembly out = assembly;
    Complex v_old = vandermonde_product(assembly.nodes);
    out.nodes = assembly.nodes.permuted(perm);
    Complex v_new = vandermonde_product(out.nodes);
    out.prefactor = assembly.prefactor * (v_old / v_new);
    return out;
}

PolyC evaluate_det_assembly(const DetAssembly& assembly) {
    PolyC det = last_row_det(assembly.nodes, assembly.last_row);
    PolyC out = det.scaled(assembly.prefactor);
    if (assembly.multiply_by_x) out = out * PolyC::identity();
    out += PolyC::constant(assembly.additive_constant);
    for (const auto& c : out.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw RefusalError("det evaluation produced a non-finite coefficient");
    return out;
}

PolyC det_xop(const XopSpec& spec) { return evaluate_det_assembly(build_det_assembly(spec)); }

double coefficientwise_relative_error(const PolyC& approx, const PolyQ& exact) {
    double scale = 0.0;
    for (const auto& c : exact.coeffs()) scale = std::max(scale, std::abs(c.to_double()));
    if (scale == 0.0) scale = 1.0;
    const std::size_t len =
        std::max(approx.coeffs().size(), exact.coeffs().size());
    double worst = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        Complex av = approx.coeff(j);
        double ev = j < exact.coeffs().size() ? exact.coeff(j).to_double() : 0.0;
        double diff = std::abs(av - Complex(ev, 0.0));
        worst = std::max(worst, ev != 0.0 ? diff / std::abs(ev) : diff / scale);
    }
    return worst;
}

double scale_relative_error(const PolyC& approx, const PolyQ& exact) {
    double scale = 0.0;
    for (const auto& c : exact.coeffs()) scale = std::max(scale, std::abs(c.to_double()));
    if (scale == 0.0) scale = 1.0;
    const std::size_t len = std::max(approx.coeffs().size(), exact.coeffs().size());
    double worst = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        double ev = j < exact.coeffs().size() ? exact.coeff(j).to_double() : 0.0;
        worst = std::max(worst, std::abs(approx.coeff(j) - Complex(ev, 0.0)) / scale);
    }
    return worst;
}

bool permutation_invariance(const XopSpec& spec, const std::vector<int>& perm,
                            double rel_tol) {
    DetAssembly base = build_det_assembly(spec);
    PolyC reference = evaluate_det_assembly(base);
    PolyC shuffled = evaluate_det_assembly(reorder_assembly(base, perm));
    double scale = 0.0;
    for (const auto& c : reference.coeffs()) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) scale = 1.0;
    const std::size_t len =
        std::max(reference.coeffs().size(), shuffled.coeffs().size());
    for (std::size_t j = 0; j < len; ++j)
        if (std::abs(reference.coeff(j) - shuffled.coeff(j)) > rel_tol * scale)
            return false;
    return true;
}

namespace {

// Row pattern of the first-order-relation matrix whose kernel contains the
// coefficient vector of the target polynomial.
std::vector<LC> relation_row(const XopSpec& spec, const Complex& node, int k) {
    LC z(node);
    std::vector<LC> row(k);
    switch (spec.family) {
        case XopFamily::LagI: {
            // entry j: z^j (j + a)
            LC p(1.0L, 0.0L);
            long double a = spec.alpha.to_long_double();
            for (int j = 0; j < k; ++j) {
                row[j] = p * LC(j + a);
                p *= z;
            }
            break;
        }
        case XopFamily::LagII: {
            // entry 0: 1; entry j: z^{j-1} (z - j)
            row[0] = LC(1.0L, 0.0L);
            LC p(1.0L, 0.0L);
            for (int j = 1; j < k; ++j) {
                row[j] = p * (z - LC(static_cast<long double>(j)));
                p *= z;
            }
            break;
        }
        case XopFamily::LagIII:
        case XopFamily::Hermite11: {
            // entry j: (j+1) z^j  (derivative pattern)
            LC p(1.0L, 0.0L);
            for (int j = 0; j < k; ++j) {
                row[j] = p * LC(static_cast<long double>(j + 1));
                p *= z;
            }
            break;
        }
        case XopFamily::Jacobi: {
            // entry 0: b; entry j: z^{j-1} (j + (j+b) z)
            long double b = spec.beta.to_long_double();
            row[0] = LC(b);
            LC p(1.0L, 0.0L);
            for (int j = 1; j < k; ++j) {
                row[j] = p * (LC(static_cast<long double>(j)) + LC(j + b) * z);
                p *= z;
            }
            break;
        }
        case XopFamily::HermiteGeneral:
            throw std::invalid_argument("relation_row: no determinantal relation");
    }
    return row;
}

}  // namespace

double kernel_matrix_smallest_singular(const XopSpec& spec, const Complex& x,
                                       double* norm_out) {
    DetAssembly assembly = build_det_assembly(spec);
    const int k = assembly.size;
    std::vector<std::vector<LC>> mat;
    mat.reserve(k);
    for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(k); ++r)
        mat.push_back(relation_row(spec, assembly.nodes.points[r], k));
    std::vector<LC> last(k);
    LC p(1.0L, 0.0L);
    for (int j = 0; j < k; ++j) {
        last[j] = p;
        p *= LC(x);
    }
    mat.push_back(std::move(last));

    if (norm_out) {
        long double fro = 0.0L;
        for (const auto& row : mat)
            for (const auto& v : row) fro += std::norm(v);
        *norm_out = static_cast<double>(std::sqrt(fro));
    }

    // Inverse power iteration on B = M^H M with pivot regularization.
    std::vector<std::vector<LC>> bmat(k, std::vector<LC>(k, LC(0.0L, 0.0L)));
    long double bnorm = 0.0L;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            LC s(0.0L, 0.0L);
            for (int r = 0; r < k; ++r) s += std::conj(mat[r][i]) * mat[r][j];
            bmat[i][j] = s;
            bnorm = std::max(bnorm, std::abs(s));
        }
    if (bnorm == 0.0L) return 0.0;

    std::vector<LC> v(k);
    for (int i = 0; i < k; ++i) v[i] = LC(1.0L / std::sqrt(static_cast<long double>(k)));
    long double sigma_sq = bnorm;
    for (int iter = 0; iter < 40; ++iter) {
        // Solve (B + eps) y = v by Gaussian elimination.
        std::vector<std::vector<LC>> a = bmat;
        std::vector<LC> y = v;
        const long double reg = bnorm * 1e-30L;
        for (int col = 0; col < k; ++col) {
            int pivot = col;
            for (int r = col + 1; r < k; ++r)
                if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
            std::swap(a[pivot], a[col]);
            std::swap(y[pivot], y[col]);
            if (std::abs(a[col][col]) < reg) a[col][col] += LC(reg);
            for (int r = col + 1; r < k; ++r) {
                LC f = a[r][col] / a[col][col];
                for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
                y[r] -= f * y[col];
            }
        }
        for (int r = k - 1; r >= 0; --r) {
            for (int c = r + 1; c < k; ++c) y[r] -= a[r][c] * y[c];
            y[r] /= a[r][r];
        }
        long double norm = 0.0L;
        for (const auto& t : y) norm += std::norm(t);
        norm = std::sqrt(norm);
        if (!(norm > 0.0L) || !std::isfinite(static_cast<double>(norm))) break;
        sigma_sq = 1.0L / norm;
        for (int i = 0; i < k; ++i) v[i] = y[i] / norm;
    }
    return std::sqrt(static_cast<double>(sigma_sq));
}

}  // namespace xoplab
