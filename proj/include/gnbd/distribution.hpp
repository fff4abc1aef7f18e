#pragma once

#include <complex>
#include <vector>

namespace gnbd {

/// Parameter tuple of the generalized negative binomial distribution:
/// magnetic-field-like nu > 0, light intensity tau = |z|^2/R^2 in (0,1),
/// level index m, disc radius R. The discrete spectrum needs 2 nu R^2 > 1
/// and m <= floor(nu R^2 - 1/2).
struct GnbdParams {
    double nu;
    double tau;
    int m;
    double R = 1.0;

    double two_nu_r2() const { return 2.0 * nu * R * R; }
    int max_level() const;
    void validate() const;  // throws std::domain_error
};

/// Nonnegative weights over {0,1,2,...} with a certified bound on the
/// truncated mass: sum(weights) + tail_bound = 1 up to the stated tolerance.
struct TruncatedPmf {
    std::vector<double> weights;
    double tail_bound = 0.0;
};

enum class Regime { SubPoissonian, Poissonian, SuperPoissonian };

struct MandelReport {
    double mean;
    double variance;
    double q;         // Var/E - 1
    double tau_crit;  // critical intensity (the paper's plotted "squared radius")
    double rho;       // sqrt(tau_crit), anti-bunching radius in |z|
    Regime regime;
};

struct Moments {
    double mean;
    double variance;
};

/// Hyperbolic Landau level 4m(2 nu - m - 1); requires m <= floor(nu - 1/2).
double landau_level(double nu, int m);

/// Single weight p_j of the distribution (log-space Gamma ratios).
double pmf_weight(const GnbdParams& p, int j);

/// Truncated pmf; auto-truncates where the geometric tail bound drops below
/// the configured threshold (three consecutive confirmations).
TruncatedPmf pmf(const GnbdParams& p);
TruncatedPmf pmf(const GnbdParams& p, int j_max);

/// Moment generating function on the closed unit disc. Uses the displayed
/// product form away from the removable singularity xi = tau and the
/// singularity-free finite-sum form near it.
std::complex<double> mgf(const GnbdParams& p, std::complex<double> xi);

/// The two in-library evaluation routes, exposed for cross-checks.
std::complex<double> mgf_product_form(const GnbdParams& p, std::complex<double> xi);
std::complex<double> mgf_polynomial_form(const GnbdParams& p, std::complex<double> xi);

/// Characteristic function mgf(e^{iu}).
std::complex<double> cf(const GnbdParams& p, double u);

/// Closed-form mean and variance (general R through nu -> nu R^2).
Moments moments(const GnbdParams& p);

/// Critical intensity separating sub- from super-Poissonian statistics;
/// 0 for m = 0.
double tau_critical(double nu, int m);

/// Mandel parameter report; defined for R = 1 (domain error otherwise).
MandelReport mandel(const GnbdParams& p);

/// Flat-limit target: MGF of the generalized Poisson law with intensity
/// 2 nu |z|^2 at level m. Requires xi != 0.
std::complex<double> flat_limit_mgf(double nu, double z_abs, int m, std::complex<double> xi);

/// |mgf - flat limit| along increasing disc radii (contraction principle).
std::vector<double> contraction_limit_check(double nu, double z_abs, int m,
                                            std::complex<double> xi,
                                            const std::vector<double>& R_values);

}  // namespace gnbd
