#include "xoplab/rootfind.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace xoplab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool canonical_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

void canonical_sort(std::vector<Complex>& pts) {
    std::sort(pts.begin(), pts.end(), canonical_less);
}

double NodeSet::min_pairwise_gap() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::min(best, std::abs(points[i] - points[j]));
    return best;
}

double NodeSet::max_abs() const {
    double best = 0.0;
    for (const auto& z : points) best = std::max(best, std::abs(z));
    return best;
}

bool NodeSet::all_real(double imag_tol) const {
    for (const auto& z : points)
        if (std::abs(z.imag()) > imag_tol) return false;
    return true;
}

NodeSet NodeSet::permuted(const std::vector<int>& perm) const {
    if (perm.size() != points.size())
        throw std::invalid_argument("NodeSet::permuted: size mismatch");
    NodeSet out;
    out.source = source;
    out.tol = tol;
    out.points.resize(points.size());
    std::vector<bool> seen(points.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int p = perm[i];
        if (p < 0 || static_cast<std::size_t>(p) >= points.size() || seen[p])
            throw std::invalid_argument("NodeSet::permuted: not a permutation");
        seen[p] = true;
        out.points[i] = points[p];
    }
    return out;
}

NodeSet NodeSet::concat(const NodeSet& other) const {
    NodeSet out;
    out.source = source.empty() ? other.source : source + "+" + other.source;
    out.tol = std::min(tol, other.tol);
    out.points = points;
    out.points.insert(out.points.end(), other.points.begin(), other.points.end());
    canonical_sort(out.points);
    return out;
}

int max_rootfind_degree() {
    constexpr int kHardCap = 30;
    if (const char* env = std::getenv("XOPLAB_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, kHardCap);
    }
    return kHardCap;
}

namespace {

// Aberth-Ehrlich simultaneous iteration on a monic coefficient vector.
// A root counts as converged once the correction is below tol or |p(z)|
// sits at the Horner evaluation noise floor, whichever comes first.
std::vector<Complex> aberth(const std::vector<Complex>& monic, double tol) {
    const int deg = static_cast<int>(monic.size()) - 1;
    auto eval = [&](const Complex& z, Complex& p, Complex& dp, double& scale) {
        p = Complex(0.0);
        dp = Complex(0.0);
        scale = 0.0;
        const double az = std::abs(z);
        for (int i = deg; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + monic[i];
            scale = scale * az + std::abs(monic[i]);
        }
    };
    const double noise_floor = 4.0 * deg * std::numeric_limits<double>::epsilon();

    // Root-modulus bound. The naive 1 + max|c_i| circle is hopeless for
    // Laguerre-scale coefficient ratios (the leading coefficient carries a
    // 1/n!), so use Fujiwara's bound, which stays within a small factor of
    // the outermost root.
    double naive = 0.0;
    for (int i = 0; i < deg; ++i) naive = std::max(naive, std::abs(monic[i]));
    naive = 1.0 + naive;
    double fujiwara = 0.0;
    for (int k = 1; k <= deg; ++k) {
        double c = std::abs(monic[deg - k]);
        if (k == deg) c *= 0.5;
        if (c > 0.0) fujiwara = std::max(fujiwara, std::pow(c, 1.0 / k));
    }
    double radius = std::min(naive, 2.0 * fujiwara);
    if (radius == 0.0) radius = 1.0;

    std::vector<Complex> z(deg);
    for (int j = 0; j < deg; ++j) {
        double theta = 2.0 * M_PI * j / deg + 0.4;
        z[j] = radius * Complex(std::cos(theta), std::sin(theta));
    }

    const int kMaxIter = 200;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex p, dp;
            double scale;
            eval(z[i], p, dp, scale);
            if (std::abs(p) <= noise_floor * scale) continue;
            if (std::abs(dp) == 0.0) {
                z[i] += Complex(tol * 10 + 1e-8, tol * 10 + 1e-8);
                worst = std::numeric_limits<double>::infinity();
                continue;
            }
            Complex ratio = p / dp;
            Complex sum(0.0);
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (std::abs(diff) == 0.0) diff = Complex(tol, tol);
                sum += Complex(1.0) / diff;
            }
            Complex denom = Complex(1.0) - ratio * sum;
            Complex w = (std::abs(denom) == 0.0) ? ratio : ratio / denom;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst <= tol) return z;
    }
    throw RootfindError("zeros: Aberth iteration did not converge");
}

using LC = std::complex<long double>;

// Newton polishing in extended precision against the given coefficients
// (taken straight from the exact rationals whenever possible so coefficient
// rounding does not cap the attainable root accuracy).
void polish(std::vector<Complex>& roots, const std::vector<LC>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    const long double noise_floor = std::numeric_limits<long double>::epsilon();
    auto eval = [&](const LC& z, LC& p, LC& dp, long double& scale) {
        p = LC(0.0L);
        dp = LC(0.0L);
        scale = 0.0L;
        const long double az = std::abs(z);
        for (int i = deg; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + c[i];
            scale = scale * az + std::abs(c[i]);
        }
    };
    for (auto& root : roots) {
        LC z(root);
        LC p, dp;
        long double scale;
        eval(z, p, dp, scale);
        // Newton steps, keeping only improvements in |p|.
        for (int step = 0; step < 6; ++step) {
            if (std::abs(p) <= noise_floor * scale || std::abs(dp) == 0.0L) break;
            LC znew = z - p / dp;
            LC pnew, dpnew;
            long double snew;
            eval(znew, pnew, dpnew, snew);
            if (std::abs(pnew) >= std::abs(p)) break;
            z = znew;
            p = pnew;
            dp = dpnew;
            scale = snew;
        }
        root = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
}

NodeSet zeros_impl(std::vector<LC> c, double tol, std::string source) {
    const int degree = static_cast<int>(c.size()) - 1;
    if (degree < 1) throw std::invalid_argument("zeros: degree must be >= 1");
    if (degree > max_rootfind_degree())
        throw std::invalid_argument("zeros: degree exceeds cap " +
                                    std::to_string(max_rootfind_degree()));
    if (tol <= 0) throw std::invalid_argument("zeros: tolerance must be positive");

    // Pull out exact zero roots so symmetric polynomials keep an exact node
    // at the origin.
    std::size_t zero_roots = 0;
    while (zero_roots < c.size() - 1 && c[zero_roots] == LC(0.0L)) ++zero_roots;

    std::vector<Complex> roots(zero_roots, Complex(0.0));
    if (c.size() - zero_roots > 1) {
        std::vector<LC> stripped(c.begin() + zero_roots, c.end());
        LC lead = stripped.back();
        std::vector<Complex> monic(stripped.size());
        for (std::size_t i = 0; i < stripped.size(); ++i) {
            LC v = stripped[i] / lead;
            monic[i] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
        }
        auto found = aberth(monic, tol);
        polish(found, stripped);
        roots.insert(roots.end(), found.begin(), found.end());
    }

    // Residual certificate: |p(z)| <= tol * max|c_i| * max(1,|z|)^deg.
    long double cmax = 0.0L;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    for (const auto& zd : roots) {
        LC z(zd);
        LC p(0.0L);
        for (std::size_t i = c.size(); i-- > 0;) p = p * z + c[i];
        long double scale =
            cmax * std::pow(std::max<long double>(1.0L, std::abs(z)), degree);
        if (std::abs(p) > tol * scale)
            throw RootfindError("zeros: residual certificate failed");
    }

    canonical_sort(roots);
    NodeSet out;
    out.points = std::move(roots);
    out.source = std::move(source);
    out.tol = tol;
    return out;
}

}  // namespace

NodeSet zeros(const PolyC& p, double tol, std::string source) {
    std::vector<LC> c(p.coeffs().begin(), p.coeffs().end());
    return zeros_impl(std::move(c), tol, std::move(source));
}

NodeSet zeros(const PolyQ& p, double tol, std::string source) {
    std::vector<LC> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(LC(q.to_long_double(), 0.0L));
    return zeros_impl(std::move(c), tol, std::move(source));
}

namespace {

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix;
// eigenvalues only.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw RootfindError("classical_zeros: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (i == l) {
                        d[l] -= p;
                        e[l] = g;
                        e[m] = 0.0;
                    }
                }
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace

NodeSet classical_zeros(ClassicalFamily family, int n, const Rational& alpha,
                        const Rational& beta) {
    if (n < 1) throw std::invalid_argument("classical_zeros: n must be >= 1");
    if (n > max_rootfind_degree())
        throw std::invalid_argument("classical_zeros: degree exceeds cap");

    const double a = alpha.to_double();
    const double b = beta.to_double();
    std::vector<double> diag(n, 0.0), off;
    std::string name;
    switch (family) {
        case ClassicalFamily::Laguerre: {
            if (!(a > -1.0))
                throw std::invalid_argument("classical_zeros: Laguerre needs alpha > -1");
            for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + a + 1.0;
            for (int k = 1; k < n; ++k) off.push_back(std::sqrt(k * (k + a)));
            name = "laguerre(n=" + std::to_string(n) + ",alpha=" + alpha.to_string() + ")";
            break;
        }
        case ClassicalFamily::Hermite: {
            for (int k = 1; k < n; ++k) off.push_back(std::sqrt(k / 2.0));
            name = "hermite(n=" + std::to_string(n) + ")";
            break;
        }
        case ClassicalFamily::Jacobi: {
            if (!(a > -1.0) || !(b > -1.0))
                throw std::invalid_argument("classical_zeros: Jacobi needs alpha, beta > -1");
            double ab = a + b;
            diag[0] = (b - a) / (ab + 2.0);
            for (int k = 1; k < n; ++k) {
                double t = 2.0 * k + ab;
                diag[k] = (b * b - a * a) / (t * (t + 2.0));
            }
            for (int k = 1; k < n; ++k) {
                double bk;
                if (k == 1) {
                    // (1 + a + b) cancels against the k = 1 numerator factor.
                    bk = 4.0 * (1.0 + a) * (1.0 + b) /
                         ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
                } else {
                    double t = 2.0 * k + ab;
                    bk = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                         (t * t * (t + 1.0) * (t - 1.0));
                }
                off.push_back(std::sqrt(bk));
            }
            name = "jacobi(n=" + std::to_string(n) + ",alpha=" + alpha.to_string() +
                   ",beta=" + beta.to_string() + ")";
            break;
        }
    }

    tridiagonal_eigenvalues(diag, off);
    std::sort(diag.begin(), diag.end());
    NodeSet out;
    out.points.reserve(n);
    for (double x : diag) out.points.push_back(Complex(x, 0.0));
    out.source = name;
    out.tol = 1e-13;
    return out;
}

namespace {

bool in_positive_axis(const Complex& z) {
    double scale = 1.0 + std::abs(z);
    return std::abs(z.imag()) <= 1e-9 * scale && z.real() > 1e-9;
}

bool in_open_unit_interval(const Complex& z) {
    return std::abs(z.imag()) <= 1e-9 && std::abs(z.real()) < 1.0 - 1e-9;
}

double simplicity_threshold(const NodeSet& ns) { return 1e-8 * (1.0 + ns.max_abs()); }

void add_case(VerificationReport& out, const std::string& id, const std::string& check,
              CaseStatus status, const std::string& residual, double tol, double wall_ms,
              std::string detail = "") {
    CaseResult c;
    c.suite = "zero_theorems";
    c.id = id;
    c.check = check;
    c.status = status;
    c.residual = residual;
    c.tolerance = tol;
    c.wall_ms = wall_ms;
    c.detail = std::move(detail);
    out.add(std::move(c));
}

std::string dbl(double v) { return std::to_string(v); }

}  // namespace

void check_zero_theorems(int m, const Rational& alpha, const Rational& beta,
                         VerificationReport& out) {
    if (m < 1) throw std::invalid_argument("check_zero_theorems: m must be >= 1");
    const std::string id =
        "m=" + std::to_string(m) + " alpha=" + alpha.to_string() + " beta=" + beta.to_string();

    // Laguerre, classical range: zeros simple and in (0, inf).
    {
        auto t0 = Clock::now();
        if (alpha > Rational(-1)) {
            NodeSet ns = zeros(laguerre(m, alpha));
            double gap = ns.min_pairwise_gap();
            bool ok = ns.all_real(1e-9 * (1.0 + ns.max_abs()));
            for (const auto& z : ns.points)
                if (!(z.real() > 0.0)) ok = false;
            if (m > 1 && gap <= simplicity_threshold(ns)) ok = false;
            add_case(out, id, "laguerre_zeros_positive_simple",
                     ok ? CaseStatus::Pass : CaseStatus::Fail, dbl(gap),
                     simplicity_threshold(ns), ms_since(t0));
        } else {
            add_case(out, id, "laguerre_zeros_positive_simple", CaseStatus::Skipped,
                     "hypothesis alpha > -1 not met", 0.0, ms_since(t0));
        }
    }

    // Negative-parameter Laguerre: simple zeros, none on the positive axis.
    {
        auto t0 = Clock::now();
        if (alpha > Rational(m - 1)) {
            NodeSet ns = zeros(laguerre(m, -alpha - Rational(1)));
            double gap = ns.min_pairwise_gap();
            bool simple = m == 1 || gap > simplicity_threshold(ns);
            add_case(out, id, "laguerre_negative_parameter_simple",
                     simple ? CaseStatus::Pass : CaseStatus::Fail, dbl(gap),
                     simplicity_threshold(ns), ms_since(t0));
            t0 = Clock::now();
            bool excluded = true;
            for (const auto& z : ns.points)
                if (in_positive_axis(z)) excluded = false;
            add_case(out, id, "laguerre_negative_parameter_no_positive_zeros",
                     excluded ? CaseStatus::Pass : CaseStatus::Fail,
                     excluded ? "none in (0,inf)" : "zero found in (0,inf)", 0.0,
                     ms_since(t0));
        } else {
            add_case(out, id, "laguerre_negative_parameter_simple", CaseStatus::Skipped,
                     "hypothesis alpha > m-1 not met", 0.0, ms_since(t0));
            add_case(out, id, "laguerre_negative_parameter_no_positive_zeros",
                     CaseStatus::Skipped, "hypothesis alpha > m-1 not met", 0.0, 0.0);
        }
    }

    // Jacobi, classical range: zeros simple and in (-1, 1).
    {
        auto t0 = Clock::now();
        if (alpha > Rational(-1) && beta > Rational(-1)) {
            NodeSet ns = zeros(jacobi(m, alpha, beta));
            double gap = ns.min_pairwise_gap();
            bool ok = ns.all_real(1e-9 * (1.0 + ns.max_abs()));
            for (const auto& z : ns.points)
                if (!(std::abs(z.real()) < 1.0)) ok = false;
            if (m > 1 && gap <= simplicity_threshold(ns)) ok = false;
            add_case(out, id, "jacobi_zeros_interval_simple",
                     ok ? CaseStatus::Pass : CaseStatus::Fail, dbl(gap),
                     simplicity_threshold(ns), ms_since(t0));
        } else {
            add_case(out, id, "jacobi_zeros_interval_simple", CaseStatus::Skipped,
                     "hypothesis alpha, beta > -1 not met", 0.0, ms_since(t0));
        }
    }

    // Negative-parameter Jacobi: simplicity plus exclusion from (-1, 1).
    {
        auto t0 = Clock::now();
        Rational na = -alpha - Rational(1);
        Rational nb = beta - Rational(1);
        bool simple_hyp = true;
        for (int j = 1; j <= m; ++j)
            if (na == Rational(-j) || nb == Rational(-j)) simple_hyp = false;
        Rational ab = na + nb;
        for (int j = m + 1; j <= 2 * m; ++j)
            if (ab == Rational(-j)) simple_hyp = false;
        Rational gap_param = alpha + Rational(1 - m);
        bool excl_hyp =
            (beta > Rational(-1) && beta < Rational(0) && gap_param > Rational(-1) &&
             gap_param < Rational(0)) ||
            (beta > Rational(0) && gap_param > Rational(0));

        if (!simple_hyp && !excl_hyp) {
            add_case(out, id, "jacobi_negative_parameter_simple", CaseStatus::Skipped,
                     "hypotheses not met", 0.0, ms_since(t0));
            add_case(out, id, "jacobi_negative_parameter_excluded", CaseStatus::Skipped,
                     "hypotheses not met", 0.0, 0.0);
        } else {
            PolyQ p = jacobi(m, na, nb);
            if (p.degree() < 1) {
                add_case(out, id, "jacobi_negative_parameter_simple", CaseStatus::Skipped,
                         "degree dropped below 1", 0.0, ms_since(t0));
                add_case(out, id, "jacobi_negative_parameter_excluded", CaseStatus::Skipped,
                         "degree dropped below 1", 0.0, 0.0);
            } else {
                NodeSet ns = zeros(p);
                if (simple_hyp) {
                    double gap = ns.min_pairwise_gap();
                    bool simple = ns.size() <= 1 || gap > simplicity_threshold(ns);
                    add_case(out, id, "jacobi_negative_parameter_simple",
                             simple ? CaseStatus::Pass : CaseStatus::Fail, dbl(gap),
                             simplicity_threshold(ns), ms_since(t0));
                } else {
                    add_case(out, id, "jacobi_negative_parameter_simple",
                             CaseStatus::Skipped, "simplicity hypothesis not met", 0.0,
                             ms_since(t0));
                }
                t0 = Clock::now();
                if (excl_hyp) {
                    bool excluded = true;
                    for (const auto& z : ns.points)
                        if (in_open_unit_interval(z)) excluded = false;
                    add_case(out, id, "jacobi_negative_parameter_excluded",
                             excluded ? CaseStatus::Pass : CaseStatus::Fail,
                             excluded ? "none in (-1,1)" : "zero found in (-1,1)", 0.0,
                             ms_since(t0));
                } else {
                    add_case(out, id, "jacobi_negative_parameter_excluded",
                             CaseStatus::Skipped, "exclusion hypothesis not met", 0.0,
                             ms_since(t0));
                }
            }
        }
    }
}

namespace {

void enumerate_even_partitions(int max_weight, std::vector<int>& halves,
                               std::vector<Partition>& out) {
    int sum = 0;
    for (int h : halves) sum += 2 * h;
    if (!halves.empty()) {
        std::vector<int> parts;
        for (int h : halves) {
            parts.push_back(h);
            parts.push_back(h);
        }
        std::sort(parts.rbegin(), parts.rend());
        out.push_back(Partition(parts));
    }
    int limit = halves.empty() ? max_weight / 2 : halves.back();
    for (int next = 1; next <= limit; ++next) {
        if (sum + 2 * next > max_weight) break;
        halves.push_back(next);
        enumerate_even_partitions(max_weight, halves, out);
        halves.pop_back();
    }
}

}  // namespace

void check_even_partition_zero_free(int max_weight, VerificationReport& out) {
    std::vector<Partition> partitions;
    std::vector<int> halves;
    enumerate_even_partitions(max_weight, halves, partitions);
    for (const Partition& lam : partitions) {
        auto t0 = Clock::now();
        CaseResult c;
        c.suite = "zero_theorems";
        c.id = "lambda=" + lam.to_string();
        c.check = "even_partition_no_real_zeros";
        PolyQ h = generalized_hermite(lam);
        NodeSet ns = zeros(h);
        double min_imag = std::numeric_limits<double>::infinity();
        for (const auto& z : ns.points) min_imag = std::min(min_imag, std::abs(z.imag()));
        c.status = min_imag > 1e-6 ? CaseStatus::Pass : CaseStatus::Fail;
        c.residual = dbl(min_imag);
        c.tolerance = 1e-6;
        c.wall_ms = ms_since(t0);
        out.add(std::move(c));
    }
}

double genhermite_nonzero_gap_probe(const Partition& lambda) {
    NodeSet ns = zeros(generalized_hermite(lambda));
    std::vector<Complex> nonzero;
    for (const auto& z : ns.points)
        if (std::abs(z) > 1e-9) nonzero.push_back(z);
    NodeSet filtered;
    filtered.points = std::move(nonzero);
    return filtered.min_pairwise_gap();
}

}  // namespace xoplab
