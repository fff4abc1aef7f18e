#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gnbd/atomic_measure.hpp"
#include "gnbd/distribution.hpp"
#include "gnbd/tolerances.hpp"

namespace gnbd {

/// Non-vanishing threshold for the characteristic function, built from the
/// smallest zero x_1 of P_m^{(2nu-2m-1,0)}:
///   tau* = (sqrt(2) - sqrt(1-x_1)) / (sqrt(2) + sqrt(1-x_1)).
/// Requires m >= 1 and nu > m (orthogonality regime for the zeros).
double tau_star(double nu, int m);

/// A_n = tau (1-x_n) / ((1+x_n)(1-tau)^2) for each zero x_n; all lie in
/// (0, 1/4) when tau < tau*. Throws if tau >= tau*.
std::vector<double> a_coeffs(double nu, double tau, int m);

/// alpha(x) = x / (1 + sqrt(1-x))^2 on [0, 1].
double alpha(double x);

/// Quasi-Levy measure sum_n mu_n, with
///   mu_n = -sum_{s>=1} ((-1)^s/s) alpha(4A_n)^s [delta_s + delta_{-s}],
/// truncated so the omitted total variation is below tol.
SignedAtomicMeasure quasi_levy_measure(double nu, double tau, int m,
                                       double tol = kTol.levy_truncation);

/// Levy-Khintchine data: cf(u) = exp{i drift u + sum_atoms w (e^{iux} - 1)}.
struct LevyRepresentation {
    std::int64_t drift = 0;            // the level index m
    SignedAtomicMeasure measure;       // NB part + quasi-Levy part, no atom at 0
    double truncation_error = 0.0;     // bound on omitted total variation
};

/// Full representation for the distribution at R = 1. The NB part carries
/// atoms c tau^j / j at j >= 1 with c = 2 nu (the resolved constant; see
/// nb_measure_constant). Requires tau < tau* when m >= 1.
LevyRepresentation lk_representation(const GnbdParams& p, double tol = kTol.levy_truncation);

/// exp{i drift u + sum w (e^{iux} - 1)} for a drift + atomic-measure exponent.
std::complex<double> exponent_cf(const SignedAtomicMeasure& measure, std::int64_t drift, double u);
std::complex<double> exponent_cf(const LevyRepresentation& rep, double u);

/// The constant multiplying sum(tau^j/j) delta_j in the NB Levy measure.
/// The printed display omits it; expanding the log of the NB characteristic
/// function forces 2 nu R^2.
double nb_measure_constant(const GnbdParams& p);

struct CfMinimum {
    double min_abs_cf = 0.0;
    double attained_u = 0.0;
};

/// min |cf| over a uniform u grid on [-pi, pi]; strictly positive when
/// tau < tau*.
CfMinimum cf_nonvanishing_check(const GnbdParams& p, int grid_size);

/// Real product form of cf(u) e^{-imu} / nbd_cf(u):
///   (2nu-m)_m/m! prod_i (1 - (1-x_i)/2 * (1+tau^2-2tau cos u)/(1-tau)^2).
double a0_product_form(const GnbdParams& p, double u);

/// Characteristic function of the m = 0 factor, ((1-tau)/(1-tau e^{iu}))^{2nuR^2}.
std::complex<double> nbd_cf(const GnbdParams& p, double u);

}  // namespace gnbd
