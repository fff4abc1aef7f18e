#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gnbd/atomic_measure.hpp"
#include "gnbd/tolerances.hpp"

namespace gnbd {

/// Total variation of the combined Levy exponent measure: the NB part
/// unchanged plus sum_n sum_s (1/s) alpha(4A_n)^s [delta_s + delta_{-s}].
/// All atoms strictly positive. Requires m >= 1 and tau < tau*.
SignedAtomicMeasure total_variation_measure(double nu, double tau, int m,
                                            double tol = kTol.levy_truncation);

struct IntensityReport {
    double lambda;          // -2nu ln(1-tau) - 2 sum_n ln(1 - alpha_n)  (resolved constant)
    double lambda_printed;  // -ln(1-tau) - 2 sum_n ln(1 - alpha_n)      (paper display)
};

/// Total jump intensity of the compound-Poisson law (resolved value).
double intensity(double nu, double tau, int m);
IntensityReport intensity_report(double nu, double tau, int m);

/// Compound Poisson with integer drift: intensity lambda, normalized jump
/// law on Z \ {0}, drift m per unit time.
struct CompoundPoissonSpec {
    double lambda = 0.0;
    SignedAtomicMeasure jump_pmf;  // nonnegative, sums to 1
    std::int64_t drift = 0;
};

CompoundPoissonSpec compound_poisson_spec(double nu, double tau, int m,
                                          double tol = kTol.levy_truncation);

/// Characteristic function exp{imu + sum w (e^{iux}-1)} over the
/// total-variation measure; equals 1 at u = 0 by construction.
std::complex<double> id_cf(double nu, double tau, int m, double u);

/// The paper's printed closed form (not normalized at u = 0); the ratio
/// id_cf/printed is a u-independent constant.
std::complex<double> id_cf_printed_form(double nu, double tau, int m, double u);

/// Expected value of that constant: prod_n (1-alpha_n)^2/(1+alpha_n)^2.
double id_cf_ratio_expected(double nu, double tau, int m);

/// Value at time t of the compound Poisson path with drift: jump sum plus
/// llround(m t). Deterministic in (spec, seed, stream); independent draws use
/// distinct streams.
std::int64_t sample_compound_poisson(const CompoundPoissonSpec& spec, double t,
                                     std::uint64_t seed, std::uint64_t stream = 0);

struct PathPoint {
    double time;
    std::int64_t jumps;    // accumulated jump sum
    double drift_accrual;  // m * time
    double value;          // jumps + drift_accrual
};

/// Path up to the horizon: all jump times merged with an n_steps uniform
/// grid, in increasing time order. Shares the arrival scheme (and therefore
/// the end value) with sample_compound_poisson at the same seed and stream.
std::vector<PathPoint> simulate_path(const CompoundPoissonSpec& spec, double horizon,
                                     int n_steps, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace gnbd
