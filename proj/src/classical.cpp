#include "xoplab/classical.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace xoplab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rational rational_pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Determinant of a small rational matrix by Gaussian elimination.
Rational rational_det(std::vector<std::vector<Rational>> m) {
    const std::size_t k = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col].is_zero()) ++pivot;
        if (pivot == k) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("Partition: empty");
    return Partition(std::move(parts));
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

bool Partition::is_even() const {
    if (parts_.size() % 2 != 0) return false;
    for (std::size_t j = 0; j + 1 < parts_.size(); j += 2)
        if (parts_[j] != parts_[j + 1]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

PolyQ laguerre(int n, const Rational& alpha) {
    if (n < 0) return PolyQ();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational sign(1);
    for (int k = 0; k <= n; ++k) {
        c[k] = sign * gen_binomial(alpha + Rational(n), static_cast<unsigned>(n - k)) /
               rational_factorial(static_cast<unsigned>(k));
        sign = -sign;
    }
    return PolyQ(std::move(c));
}

PolyQ jacobi(int n, const Rational& alpha, const Rational& beta) {
    if (n < 0) return PolyQ();
    PolyQ acc;
    // basis = ((x-1)/2)^k, accumulated by repeated multiplication.
    PolyQ basis = PolyQ::constant(Rational(1));
    PolyQ half_shift(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    Rational abn1 = alpha + beta + Rational(n) + Rational(1);
    for (int k = 0; k <= n; ++k) {
        Rational coeff = gen_binomial(Rational(n), static_cast<unsigned>(k)) *
                         pochhammer(abn1, static_cast<unsigned>(k)) *
                         pochhammer(alpha + Rational(k) + Rational(1),
                                    static_cast<unsigned>(n - k));
        acc += basis.scaled(coeff);
        if (k < n) basis *= half_shift;
    }
    return acc.scaled(Rational(1) / rational_factorial(static_cast<unsigned>(n)));
}

bool jacobi_degree_is_full(int n, const Rational& alpha, const Rational& beta) {
    Rational s = alpha + beta + Rational(n);
    for (int j = 1; j <= n; ++j)
        if (s == Rational(-j)) return false;
    return true;
}

PolyQ hermite(int n) {
    if (n < 0) return PolyQ();
    PolyQ h = PolyQ::constant(Rational(1));
    PolyQ two_x(std::vector<Rational>{Rational(0), Rational(2)});
    for (int k = 1; k <= n; ++k) h = two_x * h - h.derivative();
    return h;
}

std::vector<PolyQ> generalized_hermite_factors(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int m = lambda.length();
    std::vector<PolyQ> list;
    list.reserve(parts.size());
    for (int t = 0; t < m; ++t) list.push_back(hermite(parts[m - 1 - t] + t));
    return list;
}

PolyQ generalized_hermite(const Partition& lambda) {
    if (lambda.length() == 0) return PolyQ::constant(Rational(1));
    return wronskian(generalized_hermite_factors(lambda));
}

PolyQ exp_partial_sum(int n) {
    if (n < 0) return PolyQ();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        c[j] = Rational(1) / rational_factorial(static_cast<unsigned>(j));
    return PolyQ(std::move(c));
}

PolyQ r_partial_sum(int n, const Rational& beta) {
    if (n < 0) return PolyQ();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational sign(1);
    for (int j = 0; j <= n; ++j) {
        c[j] = sign * pochhammer(beta, static_cast<unsigned>(j)) /
               rational_factorial(static_cast<unsigned>(j));
        sign = -sign;
    }
    return PolyQ(std::move(c));
}

namespace {

std::string rat_str(const Rational& r) { return r.to_string(); }

void run_exact_sweep(VerificationReport& out, const std::string& id,
                     const std::string& check, int n_lo, int n_hi,
                     const std::function<PolyQ(int)>& residual_at) {
    auto t0 = Clock::now();
    CaseResult c;
    c.suite = "classical_identities";
    c.id = id;
    c.check = check;
    for (int n = n_lo; n <= n_hi; ++n) {
        PolyQ res = residual_at(n);
        if (!res.is_zero()) {
            c.status = CaseStatus::Fail;
            c.residual = res.leading().to_double() == 0.0 ? "nonzero" : std::to_string(res.leading().to_double());
            c.detail = "first failing n=" + std::to_string(n);
            break;
        }
    }
    c.wall_ms = ms_since(t0);
    out.add(std::move(c));
}

}  // namespace

void check_classical_identities(int n_max, const std::vector<Rational>& alphas,
                                const std::vector<Rational>& betas,
                                VerificationReport& out) {
    if (n_max < 2) throw std::invalid_argument("check_classical_identities: n_max must be >= 2");

    for (const Rational& a : alphas) {
        run_exact_sweep(out, "alpha=" + rat_str(a), "laguerre_derivative", 1, n_max,
                        [&](int n) {
                            return laguerre(n, a).derivative() + laguerre(n - 1, a + Rational(1));
                        });
        run_exact_sweep(out, "alpha=" + rat_str(a), "laguerre_parameter_shift", 0, n_max,
                        [&](int n) {
                            return laguerre(n, a) - laguerre(n, a + Rational(1)) +
                                   laguerre(n - 1, a + Rational(1));
                        });
        run_exact_sweep(out, "alpha=" + rat_str(a), "laguerre_three_term", 0, n_max - 1,
                        [&](int n) {
                            PolyQ x = PolyQ::identity();
                            return x * laguerre(n, a + Rational(1)) -
                                   laguerre(n, a).scaled(Rational(n) + a + Rational(1)) +
                                   laguerre(n + 1, a).scaled(Rational(n + 1));
                        });
    }

    run_exact_sweep(out, "parity=even", "hermite_laguerre_connection", 0, n_max / 2,
                    [&](int n) {
                        Rational scale = rational_pow(Rational(-4), static_cast<unsigned>(n)) *
                                         rational_factorial(static_cast<unsigned>(n));
                        return hermite(2 * n) -
                               laguerre(n, Rational(-1, 2)).compose_square().scaled(scale);
                    });
    run_exact_sweep(out, "parity=odd", "hermite_laguerre_connection", 0, n_max / 2,
                    [&](int n) {
                        Rational scale = Rational(2) *
                                         rational_pow(Rational(-4), static_cast<unsigned>(n)) *
                                         rational_factorial(static_cast<unsigned>(n));
                        PolyQ x = PolyQ::identity();
                        return hermite(2 * n + 1) -
                               (x * laguerre(n, Rational(1, 2)).compose_square()).scaled(scale);
                    });
    run_exact_sweep(out, "hermite", "hermite_derivative", 1, n_max, [&](int n) {
        return hermite(n).derivative() - hermite(n - 1).scaled(Rational(2 * n));
    });
    run_exact_sweep(out, "hermite", "hermite_recurrence", 1, n_max, [&](int n) {
        PolyQ prev = hermite(n - 1);
        PolyQ two_x(std::vector<Rational>{Rational(0), Rational(2)});
        return hermite(n) - (two_x * prev - prev.derivative());
    });

    // Generalized Hermite Wronskians: degree law plus a pointwise exact
    // determinant oracle (scalar determinant of the derivative matrix at
    // rational sample points must match the expanded polynomial).
    const std::vector<Partition> partitions = {
        Partition({1}),    Partition({2}),       Partition({3}),
        Partition({1, 1}), Partition({2, 1}),    Partition({2, 2}),
        Partition({3, 1}), Partition({2, 1, 1}), Partition({3, 2, 1})};
    const std::vector<Rational> sample_points = {Rational(0), Rational(1), Rational(-1, 2),
                                                 Rational(2, 3)};
    for (const Partition& lam : partitions) {
        auto t0 = Clock::now();
        CaseResult c;
        c.suite = "classical_identities";
        c.id = "lambda=" + lam.to_string();
        c.check = "genhermite_wronskian";
        PolyQ h = generalized_hermite(lam);
        if (h.degree() != lam.weight()) {
            c.status = CaseStatus::Fail;
            c.detail = "degree " + std::to_string(h.degree()) + " != weight " +
                       std::to_string(lam.weight());
        } else {
            auto factors = generalized_hermite_factors(lam);
            const std::size_t k = factors.size();
            for (const Rational& t : sample_points) {
                std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
                for (std::size_t col = 0; col < k; ++col) {
                    PolyQ d = factors[col];
                    for (std::size_t row = 0; row < k; ++row) {
                        m[row][col] = d(t);
                        d = d.derivative();
                    }
                }
                if (!(rational_det(std::move(m)) == h(t))) {
                    c.status = CaseStatus::Fail;
                    c.detail = "pointwise mismatch at t=" + t.to_string();
                    break;
                }
            }
        }
        c.wall_ms = ms_since(t0);
        out.add(std::move(c));
    }

    run_exact_sweep(out, "exp_sum", "exp_sum_is_laguerre", 0, n_max, [&](int n) {
        Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        return exp_partial_sum(n) - laguerre(n, Rational(-n - 1)).scaled(sign);
    });
    for (const Rational& b : betas) {
        run_exact_sweep(out, "beta=" + rat_str(b), "binomial_sum_is_jacobi", 0, n_max,
                        [&](int n) {
                            Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
                            PolyQ shifted = jacobi(n, Rational(-n - 1), b)
                                                .compose_affine(Rational(1), Rational(2));
                            return r_partial_sum(n, b) - shifted.scaled(sign);
                        });
    }
}

}  // namespace xoplab
