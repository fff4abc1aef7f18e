#include "gnbd/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "gnbd/detail/kahan.hpp"
#include "gnbd/specialfn.hpp"
#include "gnbd/tolerances.hpp"

namespace gnbd {

int GnbdParams::max_level() const { return static_cast<int>(std::floor(nu * R * R - 0.5)); }

void GnbdParams::validate() const {
    if (!(nu > 0.0)) throw std::domain_error("GnbdParams: requires nu > 0");
    if (!(R > 0.0)) throw std::domain_error("GnbdParams: requires R > 0");
    if (!(two_nu_r2() > 1.0))
        throw std::domain_error("GnbdParams: requires 2 nu R^2 > 1 (no discrete spectrum)");
    if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("GnbdParams: requires 0 < tau < 1");
    if (m < 0) throw std::domain_error("GnbdParams: requires m >= 0");
    if (m > max_level()) throw std::domain_error("GnbdParams: m exceeds floor(nu R^2 - 1/2)");
}

double landau_level(double nu, int m) {
    if (m < 0 || m > static_cast<int>(std::floor(nu - 0.5)))
        throw std::domain_error("landau_level: requires 0 <= m <= floor(nu - 1/2)");
    return 4.0 * m * (2.0 * nu - m - 1.0);
}

double pmf_weight(const GnbdParams& p, int j) {
    if (j < 0) throw std::domain_error("pmf_weight: requires j >= 0");
    const double c2 = p.two_nu_r2();
    const int n = std::min(p.m, j);
    const int diff = std::abs(p.m - j);
    double log_gamma_j;
    if (j <= p.m)
        log_gamma_j = log_gamma(j + 1.0) + log_gamma(c2 - p.m) - log_gamma(p.m + 1.0) -
                      log_gamma(c2 - 2.0 * p.m + j);
    else
        log_gamma_j = log_gamma(p.m + 1.0) + log_gamma(c2 - 2.0 * p.m + j) -
                      log_gamma(j + 1.0) - log_gamma(c2 - p.m);
    double t = log_gamma_j + (c2 - 2.0 * p.m) * std::log1p(-p.tau) + diff * std::log(p.tau);
    double P = jacobi_eval({n, static_cast<double>(diff), c2 - 2.0 * p.m - 1.0}, 1.0 - 2.0 * p.tau);
    if (P == 0.0) return 0.0;
    return std::exp(t + 2.0 * std::log(std::abs(P)));
}

namespace {

// Geometric majorant on the omitted mass: beyond the decay regime the weight
// ratio is below sqrt(tau), so sum_{i>j} w_i <= w_j sqrt(tau)/(1-sqrt(tau)).
double tail_bound_from(double w, double tau) {
    double r = std::sqrt(tau);
    return w * r / (1.0 - r);
}

}  // namespace

TruncatedPmf pmf(const GnbdParams& p, int j_max) {
    p.validate();
    if (j_max < 0) throw std::domain_error("pmf: requires j_max >= 0");
    TruncatedPmf out;
    out.weights.resize(j_max + 1);
    for (int j = 0; j <= j_max; ++j) out.weights[j] = pmf_weight(p, j);
    out.tail_bound = tail_bound_from(out.weights[j_max], p.tau);
    return out;
}

TruncatedPmf pmf(const GnbdParams& p) {
    p.validate();
    constexpr int kMaxTerms = 200000;
    const double eps = kTol.pmf_truncation_weight;
    // the geometric-ratio argument is only valid past the distribution's
    // bulk; gate the confirmation counter on the closed-form mean
    const double mean = 2.0 * p.tau * p.nu * p.R * p.R / (1.0 - p.tau) + p.m;
    TruncatedPmf out;
    int confirmations = 0;
    double prev = 0.0;
    for (int j = 0; j < kMaxTerms; ++j) {
        double w = pmf_weight(p, j);
        out.weights.push_back(w);
        double bound = w / (1.0 - std::sqrt(p.tau));
        bool decaying = j > 0 && w <= prev;
        if (j > p.m && j >= mean && decaying && bound < eps) {
            if (++confirmations >= 3) {
                out.tail_bound = tail_bound_from(w, p.tau);
                return out;
            }
        } else {
            confirmations = 0;
        }
        prev = w;
    }
    throw ConvergenceError("pmf: truncation did not converge");
}

std::complex<double> mgf_product_form(const GnbdParams& p, std::complex<double> xi) {
    const double c2 = p.two_nu_r2();
    const double omt = 1.0 - p.tau;
    std::complex<double> nb = std::pow(omt / (1.0 - p.tau * xi), c2);
    std::complex<double> denom = (p.tau - xi) * (1.0 - p.tau * xi);
    std::complex<double> mid = 1.0;
    std::complex<double> base = denom / (omt * omt);
    for (int i = 0; i < p.m; ++i) mid *= base;
    std::complex<double> arg = 1.0 + 2.0 * xi * omt * omt / denom;
    return nb * mid * jacobi_eval({p.m, c2 - 2.0 * p.m - 1.0, 0.0}, arg);
}

std::complex<double> mgf_polynomial_form(const GnbdParams& p, std::complex<double> xi) {
    const double c2 = p.two_nu_r2();
    const double omt = 1.0 - p.tau;
    std::complex<double> nb = std::pow(omt / (1.0 - p.tau * xi), c2);
    const double x = p.tau / (omt * omt);
    const std::complex<double> one_minus_xi_sq = (1.0 - xi) * (1.0 - xi);
    detail::KahanSum<std::complex<double>> sum;
    for (int j = 0; j <= p.m; ++j) {
        std::complex<double> t = gen_binomial(c2 - p.m - 1.0, j) * gen_binomial(p.m, j);
        t *= std::pow(x, j);
        for (int i = 0; i < p.m - j; ++i) t *= xi;
        for (int i = 0; i < j; ++i) t *= one_minus_xi_sq;
        sum.add(t);
    }
    return nb * sum.value();
}

std::complex<double> mgf(const GnbdParams& p, std::complex<double> xi) {
    p.validate();
    if (std::abs(xi) > 1.0 + 1e-12) throw std::domain_error("mgf: requires |xi| <= 1");
    double sep = std::abs(xi - p.tau) * std::abs(1.0 - p.tau * xi);
    // near the removable singularity the displayed product form has a 0*inf
    // cancellation, and |P_m| overflows once (2/sep)^m passes the double
    // range; widen the switch with the degree
    double threshold = kTol.mgf_singularity_switch;
    if (p.m > 0) threshold = std::max(threshold, 4.0 * std::pow(10.0, -300.0 / p.m));
    if (sep < threshold) return mgf_polynomial_form(p, xi);
    return mgf_product_form(p, xi);
}

std::complex<double> cf(const GnbdParams& p, double u) {
    return mgf(p, std::complex<double>{std::cos(u), std::sin(u)});
}

Moments moments(const GnbdParams& p) {
    p.validate();
    const double ne = p.nu * p.R * p.R;
    const double omt = 1.0 - p.tau;
    double mean = 2.0 * p.tau * ne / omt + p.m;
    double var = 2.0 * p.tau * (ne + p.m * (2.0 * ne - p.m - 1.0)) / (omt * omt);
    return {mean, var};
}

double tau_critical(double nu, int m) {
    if (m == 0) return 0.0;
    if (!(2.0 * nu > m)) throw std::domain_error("tau_critical: requires 2 nu > m");
    double s = m / (2.0 * nu - m);
    // rationalized positive root of (2nu-m) t^2 + 2m(2nu-m) t - m = 0
    return s / (std::sqrt(m * static_cast<double>(m) + s) + m);
}

MandelReport mandel(const GnbdParams& p) {
    p.validate();
    if (p.R != 1.0) throw std::domain_error("mandel: the anti-bunching radius is defined for R = 1");
    Moments mo = moments(p);
    MandelReport r{};
    r.mean = mo.mean;
    r.variance = mo.variance;
    r.q = mo.variance / mo.mean - 1.0;
    r.tau_crit = tau_critical(p.nu, p.m);
    r.rho = std::sqrt(r.tau_crit);
    const double tol = kTol.mandel_regime_q;
    r.regime = r.q < -tol ? Regime::SubPoissonian
                          : (r.q > tol ? Regime::SuperPoissonian : Regime::Poissonian);
    return r;
}

std::complex<double> flat_limit_mgf(double nu, double z_abs, int m, std::complex<double> xi) {
    if (std::abs(xi) == 0.0) throw std::domain_error("flat_limit_mgf: requires xi != 0");
    const double lam = 2.0 * nu * z_abs * z_abs;
    std::complex<double> xpow = 1.0;
    for (int i = 0; i < m; ++i) xpow *= xi;
    std::complex<double> larg = -lam * (1.0 - xi) * (1.0 - xi) / xi;
    return std::exp(lam * (xi - 1.0)) * xpow * laguerre_eval(m, 0.0, larg);
}

std::vector<double> contraction_limit_check(double nu, double z_abs, int m,
                                            std::complex<double> xi,
                                            const std::vector<double>& R_values) {
    std::complex<double> target = flat_limit_mgf(nu, z_abs, m, xi);
    std::vector<double> gaps;
    gaps.reserve(R_values.size());
    for (double R : R_values) {
        GnbdParams p{nu, z_abs * z_abs / (R * R), m, R};
        gaps.push_back(std::abs(mgf(p, xi) - target));
    }
    return gaps;
}

}  // namespace gnbd
