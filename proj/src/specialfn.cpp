#include "gnbd/specialfn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gnbd/detail/double_double.hpp"
#include "gnbd/detail/kahan.hpp"

namespace gnbd {

namespace dd = detail;

namespace {

// lgamma without the signgam global (thread-safe on glibc)
double lgamma_pos(double x) {
#ifdef __GLIBC__
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    return lgamma_pos(x);
}

double pochhammer(double x, int k) {
    if (k < 0) throw std::domain_error("pochhammer: requires k >= 0");
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
}

double gen_binomial(double x, int k) {
    if (k < 0) throw std::domain_error("gen_binomial: requires k >= 0");
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= (x - k + i) / i;
    return r;
}

namespace {

// x enters as an exact double-double so inexact parameters (a = -0.9, ...)
// perturb every term consistently; per-factor double rounding would feed
// the cancellation noise floor
dd::DD dd_gen_binomial(dd::DD x, int k) {
    dd::DD r{1.0};
    for (int i = 1; i <= k; ++i)
        r = dd::div(dd::mul(r, dd::add(x, dd::DD{static_cast<double>(i - k)})),
                    static_cast<double>(i));
    return r;
}

dd::DD dd_pochhammer(dd::DD x, int k) {
    dd::DD r{1.0};
    for (int i = 0; i < k; ++i) r = dd::mul(r, dd::add(x, dd::DD{static_cast<double>(i)}));
    return r;
}

}  // namespace

double jacobi_eval(const JacobiSpec& spec, double x) {
    if (spec.n < 0) throw std::domain_error("jacobi_eval: requires n >= 0");
    const int n = spec.n;
    // (x -+ 1)/2 via error-free transforms so both routes see the same point
    const dd::DD half_minus = dd::div(dd::two_sum(x, -1.0), 2.0);
    const dd::DD half_plus = dd::div(dd::two_sum(x, 1.0), 2.0);
    dd::DD sum{0.0};
    for (int k = 0; k <= n; ++k) {
        dd::DD t = dd::mul(dd_gen_binomial(n + spec.a, k), dd_gen_binomial(n + spec.b, n - k));
        t = dd::mul(t, dd::powi(half_minus, n - k));
        t = dd::mul(t, dd::powi(half_plus, k));
        sum = dd::add(sum, t);
    }
    return sum.value();
}

std::complex<double> jacobi_eval(const JacobiSpec& spec, std::complex<double> x) {
    if (spec.n < 0) throw std::domain_error("jacobi_eval: requires n >= 0");
    const int n = spec.n;
    const std::complex<double> hm = (x - 1.0) / 2.0;
    const std::complex<double> hp = (x + 1.0) / 2.0;
    detail::KahanSum<std::complex<double>> sum;
    for (int k = 0; k <= n; ++k) {
        std::complex<double> t = gen_binomial(n + spec.a, k) * gen_binomial(n + spec.b, n - k);
        for (int i = 0; i < n - k; ++i) t *= hm;
        for (int i = 0; i < k; ++i) t *= hp;
        sum.add(t);
    }
    return sum.value();
}

double jacobi_eval_hyp(const JacobiSpec& spec, double x) {
    if (spec.n < 0) throw std::domain_error("jacobi_eval_hyp: requires n >= 0");
    if (!(spec.a > -1.0))
        throw std::domain_error("jacobi_eval_hyp: 2F1 route requires a > -1");
    // keep the expansion variable (1-x)/2 at or below 1/2: for x < 0 evaluate
    // the reflected polynomial (-1)^n P_n^{(b,a)}(-x) instead
    if (x < 0.0 && spec.b > -1.0) {
        double v = jacobi_eval_hyp({spec.n, spec.b, spec.a}, -x);
        return spec.n % 2 == 0 ? v : -v;
    }
    const int n = spec.n;
    const dd::DD z = dd::div(dd::two_sum(1.0, -x), 2.0);
    dd::DD term{1.0};
    dd::DD sum{0.0};
    for (int k = 0; k <= n; ++k) {
        sum = dd::add(sum, term);
        dd::DD num = dd::mul(dd::DD{static_cast<double>(-n + k)}, spec.a + spec.b + n + 1 + k);
        dd::DD den = dd::mul(dd::DD{spec.a + 1 + k}, static_cast<double>(k + 1));
        term = dd::mul(term, dd::div(num, den));
        term = dd::mul(term, z);
    }
    dd::DD pref = dd_pochhammer(spec.a + 1.0, n);
    for (int i = 2; i <= n; ++i) pref = dd::div(pref, static_cast<double>(i));
    return dd::mul(pref, sum).value();
}

double jacobi_deriv(const JacobiSpec& spec, double x) {
    if (spec.n <= 0) return 0.0;
    JacobiSpec d{spec.n - 1, spec.a + 1.0, spec.b + 1.0};
    return 0.5 * (spec.n + spec.a + spec.b + 1.0) * jacobi_eval(d, x);
}

double jacobi_leading_coeff_log(const JacobiSpec& spec) {
    const int n = spec.n;
    double s = -n * std::numbers::ln2 - lgamma_pos(n + 1.0);
    // (n+a+b+1)_n, all factors positive when a,b > -1 and n >= 1
    for (int i = 0; i < n; ++i) s += std::log(spec.n + spec.a + spec.b + 1.0 + i);
    return s;
}

ZeroSet jacobi_zeros(const JacobiSpec& spec) {
    if (!(spec.a > -1.0) || !(spec.b > -1.0))
        throw std::domain_error("jacobi_zeros: requires a > -1 and b > -1");
    if (spec.n < 1) throw std::domain_error("jacobi_zeros: requires n >= 1");

    const int n = spec.n;
    const double a = spec.a, b = spec.b;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));

    // Golub-Welsch: recurrence coefficients of the monic Jacobi polynomials.
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        double apb2k = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (apb2k * (apb2k + 2.0));
    }
    if (n > 1) {
        // k = 1 written with the (1+a+b) factor cancelled: it vanishes at
        // a+b = -1 together with (2k+a+b)^2 - 1.
        sub[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0)));
        for (int k = 2; k < n; ++k) {
            double apb2k = 2.0 * k + a + b;
            double beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                          (apb2k * apb2k * (apb2k + 1.0) * (apb2k - 1.0));
            sub[k - 1] = std::sqrt(beta);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("jacobi_zeros: tridiagonal eigensolver failed");

    ZeroSet out;
    out.degree = n;
    out.zeros.resize(n);
    for (int i = 0; i < n; ++i) out.zeros[i] = solver.eigenvalues()[i];
    std::sort(out.zeros.begin(), out.zeros.end());

    // one Newton polish per root, then certify the residual of the monic
    // polynomial
    const double lead_log = jacobi_leading_coeff_log(spec);
    double worst = 0.0;
    for (double& z : out.zeros) {
        double p = jacobi_eval(spec, z);
        double dp = jacobi_deriv(spec, z);
        if (dp != 0.0) {
            double step = p / dp;
            if (std::abs(step) < 1e-3) z -= step;
        }
        worst = std::max(worst, std::abs(jacobi_eval(spec, z)));
    }
    std::sort(out.zeros.begin(), out.zeros.end());
    out.residual_bound = worst * std::exp(-lead_log);
    return out;
}

double laguerre_eval(int n, double a, double x) {
    if (n < 0) throw std::domain_error("laguerre_eval: requires n >= 0");
    detail::KahanSum<double> sum;
    double term = 1.0;  // binom(n,k)(-x)^k / (a+1)_k
    for (int k = 0; k <= n; ++k) {
        sum.add(term);
        term *= -(static_cast<double>(n - k) / (k + 1.0)) * x / (a + 1.0 + k);
    }
    return pochhammer(a + 1.0, n) / std::tgamma(n + 1.0) * sum.value();
}

std::complex<double> laguerre_eval(int n, double a, std::complex<double> x) {
    if (n < 0) throw std::domain_error("laguerre_eval: requires n >= 0");
    detail::KahanSum<std::complex<double>> sum;
    std::complex<double> term = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum.add(term);
        term *= -(static_cast<double>(n - k) / (k + 1.0)) * x / (a + 1.0 + k);
    }
    return pochhammer(a + 1.0, n) / std::tgamma(n + 1.0) * sum.value();
}

double hyp_poly_3f2(int a1, double a2, double a3, double b1, double b2, double x) {
    if (a1 > 0) throw std::domain_error("hyp_poly_3f2: first parameter must be a nonpositive integer");
    const int nterms = -a1;  // series has nterms+1 terms, ratios use j = 0..nterms-1
    for (double bp : {b1, b2}) {
        double r = std::round(bp);
        if (bp <= 0.0 && bp == r && -static_cast<int>(r) < nterms)
            throw std::domain_error("hyp_poly_3f2: bottom parameter hits a nonpositive integer before termination");
    }
    detail::KahanSum<double> sum;
    double term = 1.0;
    for (int j = 0; j <= nterms; ++j) {
        sum.add(term);
        term *= (a1 + j) * (a2 + j) * (a3 + j) / ((b1 + j) * (b2 + j) * (1.0 + j)) * x;
    }
    return sum.value();
}

double duplication_check(double x) {
    if (!(x > 0.0)) throw std::domain_error("duplication_check: requires x > 0");
    double lhs = 0.5 * std::log(std::numbers::pi) + log_gamma(2.0 * x + 1.0);
    double rhs = 2.0 * x * std::numbers::ln2 + log_gamma(x + 0.5) + log_gamma(x + 1.0);
    return std::abs(std::expm1(rhs - lhs));
}

}  // namespace gnbd
