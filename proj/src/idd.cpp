#include "gnbd/idd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnbd/detail/kahan.hpp"
#include "gnbd/levy.hpp"
#include "gnbd/rng.hpp"
#include "gnbd/specialfn.hpp"

namespace gnbd {

namespace {

std::vector<double> alphas_checked(double nu, double tau, int m) {
    std::vector<double> alphas;
    for (double A : a_coeffs(nu, tau, m)) alphas.push_back(alpha(4.0 * A));
    return alphas;
}

GnbdParams params_r1(double nu, double tau, int m) { return {nu, tau, m, 1.0}; }

}  // namespace

SignedAtomicMeasure total_variation_measure(double nu, double tau, int m, double tol) {
    if (m < 1) throw std::domain_error("total_variation_measure: requires m >= 1");
    if (!(tol > 0.0)) throw std::domain_error("total_variation_measure: requires tol > 0");
    // NB part unchanged plus the atom-wise absolute value of the quasi-Levy
    // part (the absolute value acts per component, not on the merged atoms)
    SignedAtomicMeasure out = quasi_levy_measure(nu, tau, m, tol / 2.0).abs_measure();
    const double c = 2.0 * nu;
    int j = 0;
    double bound;
    do {
        ++j;
        out.add_atom(j, c * std::pow(tau, j) / j);
        bound = c * std::pow(tau, j + 1) / ((j + 1) * (1.0 - tau));
    } while (bound >= tol / 2.0 && j < 100000);
    return out;
}

IntensityReport intensity_report(double nu, double tau, int m) {
    auto alphas = alphas_checked(nu, tau, m);
    double sum_ln = 0.0;
    for (double a : alphas) sum_ln += std::log1p(-a);
    IntensityReport r{};
    r.lambda = -2.0 * nu * std::log1p(-tau) - 2.0 * sum_ln;
    r.lambda_printed = -std::log1p(-tau) - 2.0 * sum_ln;
    return r;
}

double intensity(double nu, double tau, int m) { return intensity_report(nu, tau, m).lambda; }

CompoundPoissonSpec compound_poisson_spec(double nu, double tau, int m, double tol) {
    SignedAtomicMeasure tv = total_variation_measure(nu, tau, m, tol);
    CompoundPoissonSpec spec;
    spec.lambda = intensity(nu, tau, m);
    spec.drift = m;
    double total = tv.total_mass();
    for (const auto& [k, w] : tv.atoms()) spec.jump_pmf.set_atom(k, w / total);
    return spec;
}

std::complex<double> id_cf(double nu, double tau, int m, double u) {
    return exponent_cf(total_variation_measure(nu, tau, m), m, u);
}

std::complex<double> id_cf_printed_form(double nu, double tau, int m, double u) {
    if (m < 1) throw std::domain_error("id_cf_printed_form: requires m >= 1");
    if (!(tau < tau_star(nu, m))) throw std::domain_error("id_cf_printed_form: requires tau < tau*");
    GnbdParams p = params_r1(nu, tau, m);
    auto zeros = jacobi_zeros({m, 2.0 * nu - 2.0 * m - 1.0, 0.0}).zeros;
    const double omt2 = (1.0 - tau) * (1.0 - tau);
    const double w = (1.0 + tau * tau + 2.0 * tau * std::cos(u)) / omt2;
    std::complex<double> out = nbd_cf(p, u);
    out *= std::complex<double>{std::cos(m * u), std::sin(m * u)};
    out *= std::tgamma(m + 1.0) / pochhammer(2.0 * nu - m, m);
    for (double x : zeros) out /= 1.0 - 0.5 * (1.0 - x) * w;
    return out;
}

double id_cf_ratio_expected(double nu, double tau, int m) {
    double r = 1.0;
    for (double a : alphas_checked(nu, tau, m)) {
        double f = (1.0 - a) / (1.0 + a);
        r *= f * f;
    }
    return r;
}

namespace {

// Shared arrival loop: both samplers consume (exponential, jump) pairs in the
// same order, so the path's end value reproduces the scalar draw exactly.
template <typename OnJump>
void run_arrivals(const CompoundPoissonSpec& spec, double horizon, Rng& rng, OnJump&& on_jump) {
    DiscreteSampler sampler(spec.jump_pmf);
    double t = rng.exponential(spec.lambda);
    while (t <= horizon) {
        on_jump(t, sampler.sample(rng));
        t += rng.exponential(spec.lambda);
    }
}

}  // namespace

std::int64_t sample_compound_poisson(const CompoundPoissonSpec& spec, double t,
                                     std::uint64_t seed, std::uint64_t stream) {
    if (!(t > 0.0)) throw std::domain_error("sample_compound_poisson: requires t > 0");
    Rng rng(seed, stream);
    std::int64_t jumps = 0;
    run_arrivals(spec, t, rng, [&](double, std::int64_t j) { jumps += j; });
    return jumps + std::llround(spec.drift * t);
}

std::vector<PathPoint> simulate_path(const CompoundPoissonSpec& spec, double horizon,
                                     int n_steps, std::uint64_t seed, std::uint64_t stream) {
    if (!(horizon > 0.0)) throw std::domain_error("simulate_path: requires horizon > 0");
    if (n_steps < 1) throw std::domain_error("simulate_path: requires n_steps >= 1");
    Rng rng(seed, stream);

    std::vector<std::pair<double, std::int64_t>> jump_events;
    run_arrivals(spec, horizon, rng,
                 [&](double t, std::int64_t j) { jump_events.emplace_back(t, j); });

    std::vector<double> grid(n_steps + 1);
    for (int i = 0; i <= n_steps; ++i) grid[i] = horizon * i / n_steps;

    std::vector<PathPoint> path;
    path.reserve(jump_events.size() + grid.size());
    std::size_t gi = 0;
    std::int64_t jumps = 0;
    auto emit = [&](double t) {
        path.push_back({t, jumps, spec.drift * t, jumps + spec.drift * t});
    };
    for (const auto& [t, j] : jump_events) {
        while (gi < grid.size() && grid[gi] < t) emit(grid[gi++]);
        jumps += j;
        emit(t);
    }
    while (gi < grid.size()) emit(grid[gi++]);
    return path;
}

}  // namespace gnbd
