#pragma once

#include <cstdint>

#include "xoplab/report.hpp"
#include "xoplab/xop_spec.hpp"

namespace xoplab {

// Grid bounds, parameter lists, tolerances, and output knobs for a
// verification run. Defaults reproduce the full desk-scale grid.
struct RunConfig {
    int m_max = 3;
    int n_max = 12;
    std::vector<Rational> alphas;   // classical identity grid
    std::vector<Rational> betas;    // classical identity grid
    std::vector<Rational> x_betas;  // exceptional Jacobi grid
    double root_tol = 1e-13;
    double agree_tol = 1e-8;        // determinantal agreement, n <= n_max
    double agree_tol_small = 1e-10; // determinantal agreement, n <= 6
    double law_tol = 1e-9;          // leading-coefficient law
    double perm_tol = 1e-10;        // permutation invariance
    int perm_trials = 20;
    int jobs = 1;
    std::uint64_t seed = 20220625;
    std::string format = "text";  // text | json | csv
    std::string out;              // empty = stdout
    bool timings = false;         // include wall times in json/csv output
    // Negative-control fixture: scales the type-I Laguerre determinantal
    // prefactor so tests can watch the suite catch the mismatch.
    double corrupt_lag1_prefactor = 1.0;

    static RunConfig defaults();
    void validate() const;  // throws std::invalid_argument

    // Per-family parameter grids derived from the bounds above.
    std::vector<Rational> lag1_alphas() const;
    std::vector<Rational> lag2_alphas(int m) const;
    std::vector<Rational> lag3_alphas() const;
    std::vector<Rational> xjacobi_alphas(int m) const;
};

// Individual suites; each appends its cases to the report in a fixed order.
void suite_classical_identities(const RunConfig& cfg, VerificationReport& out);
void suite_zero_theorems(const RunConfig& cfg, VerificationReport& out);
void suite_path_agreement(const RunConfig& cfg, VerificationReport& out);
void suite_ode_relations(const RunConfig& cfg, VerificationReport& out);
void suite_determinantal_agreement(const RunConfig& cfg, VerificationReport& out);
void suite_leading_coefficient_law(const RunConfig& cfg, VerificationReport& out);
void suite_permutation_invariance(const RunConfig& cfg, VerificationReport& out);
void suite_lag2_constant_resolution(const RunConfig& cfg, VerificationReport& out);

// The full run, suites in a fixed order. Case order is deterministic for a
// given config and seed regardless of the parallelism degree.
VerificationReport run_verification(const RunConfig& cfg);

// Report emission.
std::string report_to_json(const VerificationReport& report, const RunConfig& cfg);
std::string report_to_csv(const VerificationReport& report, const RunConfig& cfg);
std::string report_to_text(const VerificationReport& report, const RunConfig& cfg);

// All valid exceptional specs of one family inside the config's grid.
std::vector<XopSpec> grid_specs(XopFamily family, const RunConfig& cfg);

}  // namespace xoplab
