#include "gnbd/levy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gnbd/detail/kahan.hpp"
#include "gnbd/specialfn.hpp"

namespace gnbd {

namespace {

std::vector<double> ordered_zeros(double nu, int m) {
    return jacobi_zeros({m, 2.0 * nu - 2.0 * m - 1.0, 0.0}).zeros;
}

void check_levy_domain(double nu, int m) {
    if (m < 1) throw std::domain_error("levy: requires m >= 1");
    if (!(nu > m)) throw std::domain_error("levy: requires nu > m (zeros regime)");
}

double tau_star_from_x1(double x1) {
    double r = std::sqrt(1.0 - x1);
    return (std::numbers::sqrt2 - r) / (std::numbers::sqrt2 + r);
}

}  // namespace

double tau_star(double nu, int m) {
    check_levy_domain(nu, m);
    return tau_star_from_x1(ordered_zeros(nu, m).front());
}

std::vector<double> a_coeffs(double nu, double tau, int m) {
    check_levy_domain(nu, m);
    auto zeros = ordered_zeros(nu, m);
    if (!(tau < tau_star_from_x1(zeros.front())))
        throw std::domain_error("a_coeffs: requires tau < tau*");
    if (!(tau > 0.0)) throw std::domain_error("a_coeffs: requires tau > 0");
    std::vector<double> out;
    out.reserve(zeros.size());
    const double omt2 = (1.0 - tau) * (1.0 - tau);
    for (double x : zeros) out.push_back(tau * (1.0 - x) / ((1.0 + x) * omt2));
    return out;
}

double alpha(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("alpha: requires x in [0,1]");
    double r = 1.0 + std::sqrt(1.0 - x);
    return x / (r * r);
}

namespace {

// smallest s_max with sum_n alpha_n^{s+1} / ((s+1)(1 - alpha_n)) < tol
int levy_s_max(const std::vector<double>& alphas, double tol) {
    for (int s = 1; s < 100000; ++s) {
        double bound = 0.0;
        for (double a : alphas) bound += std::pow(a, s + 1) / ((s + 1) * (1.0 - a));
        if (bound < tol) return s;
    }
    throw ConvergenceError("quasi_levy_measure: truncation did not converge");
}

SignedAtomicMeasure quasi_levy_from_alphas(const std::vector<double>& alphas, double tol,
                                           bool signed_atoms, double* bound_out) {
    int s_max = levy_s_max(alphas, tol);
    SignedAtomicMeasure out;
    for (int s = 1; s <= s_max; ++s) {
        detail::KahanSum<double> w;
        for (double a : alphas) w.add(std::pow(a, s) / s);
        double ws = (signed_atoms && s % 2 == 0) ? -w.value() : w.value();
        out.add_atom(s, ws);
        out.add_atom(-s, ws);
    }
    if (bound_out) {
        double b = 0.0;
        for (double a : alphas) b += std::pow(a, s_max + 1) / ((s_max + 1) * (1.0 - a));
        *bound_out = 2.0 * b;  // both signs of the support
    }
    return out;
}

}  // namespace

SignedAtomicMeasure quasi_levy_measure(double nu, double tau, int m, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("quasi_levy_measure: requires tol > 0");
    std::vector<double> alphas;
    for (double A : a_coeffs(nu, tau, m)) alphas.push_back(alpha(4.0 * A));
    return quasi_levy_from_alphas(alphas, tol, /*signed_atoms=*/true, nullptr);
}

double nb_measure_constant(const GnbdParams& p) { return p.two_nu_r2(); }

namespace {

// NB Levy part c tau^j/j at j >= 1, truncated below tol total variation
SignedAtomicMeasure nb_levy_part(double c, double tau, double tol, double* bound_out) {
    SignedAtomicMeasure out;
    int j = 0;
    double bound;
    do {
        ++j;
        out.set_atom(j, c * std::pow(tau, j) / j);
        bound = c * std::pow(tau, j + 1) / ((j + 1) * (1.0 - tau));
    } while (bound >= tol && j < 100000);
    if (bound >= tol) throw ConvergenceError("lk_representation: NB part truncation failed");
    if (bound_out) *bound_out = bound;
    return out;
}

}  // namespace

LevyRepresentation lk_representation(const GnbdParams& p, double tol) {
    p.validate();
    if (p.R != 1.0)
        throw std::domain_error("lk_representation: derived for R = 1");
    if (!(tol > 0.0)) throw std::domain_error("lk_representation: requires tol > 0");

    LevyRepresentation rep;
    rep.drift = p.m;
    double nb_bound = 0.0;
    rep.measure = nb_levy_part(nb_measure_constant(p), p.tau, tol / 2.0, &nb_bound);
    rep.truncation_error = nb_bound;

    if (p.m >= 1) {
        if (!(p.tau < tau_star(p.nu, p.m)))
            throw std::domain_error(
                "lk_representation: tau >= tau*, characteristic function may vanish");
        std::vector<double> alphas;
        for (double A : a_coeffs(p.nu, p.tau, p.m)) alphas.push_back(alpha(4.0 * A));
        double q_bound = 0.0;
        SignedAtomicMeasure quasi =
            quasi_levy_from_alphas(alphas, tol / 2.0, /*signed_atoms=*/true, &q_bound);
        for (const auto& [k, w] : quasi.atoms()) rep.measure.add_atom(k, w);
        rep.truncation_error += q_bound;
    }
    return rep;
}

std::complex<double> exponent_cf(const SignedAtomicMeasure& measure, std::int64_t drift, double u) {
    detail::KahanSum<std::complex<double>> expo;
    for (const auto& [k, w] : measure.atoms()) {
        double uk = u * static_cast<double>(k);
        expo.add(w * std::complex<double>{std::cos(uk) - 1.0, std::sin(uk)});
    }
    return std::exp(expo.value() + std::complex<double>{0.0, drift * u});
}

std::complex<double> exponent_cf(const LevyRepresentation& rep, double u) {
    return exponent_cf(rep.measure, rep.drift, u);
}

CfMinimum cf_nonvanishing_check(const GnbdParams& p, int grid_size) {
    p.validate();
    if (grid_size < 2) throw std::domain_error("cf_nonvanishing_check: requires grid_size >= 2");
    CfMinimum out{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < grid_size; ++i) {
        double u = -std::numbers::pi + 2.0 * std::numbers::pi * i / (grid_size - 1);
        double v = std::abs(cf(p, u));
        if (v < out.min_abs_cf) {
            out.min_abs_cf = v;
            out.attained_u = u;
        }
    }
    return out;
}

double a0_product_form(const GnbdParams& p, double u) {
    p.validate();
    const double c2 = p.two_nu_r2();
    if (p.m == 0) return 1.0;
    auto zeros = jacobi_zeros({p.m, c2 - 2.0 * p.m - 1.0, 0.0}).zeros;
    const double omt2 = (1.0 - p.tau) * (1.0 - p.tau);
    const double w = (1.0 + p.tau * p.tau - 2.0 * p.tau * std::cos(u)) / omt2;
    double prod = pochhammer(c2 - p.m, p.m) / std::tgamma(p.m + 1.0);
    for (double x : zeros) prod *= 1.0 - 0.5 * (1.0 - x) * w;
    return prod;
}

std::complex<double> nbd_cf(const GnbdParams& p, double u) {
    std::complex<double> eiu{std::cos(u), std::sin(u)};
    return std::pow((1.0 - p.tau) / (1.0 - p.tau * eiu), p.two_nu_r2());
}

}  // namespace gnbd
