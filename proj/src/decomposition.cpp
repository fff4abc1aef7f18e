#include "gnbd/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "gnbd/detail/double_double.hpp"
#include "gnbd/specialfn.hpp"

namespace gnbd {

namespace dd = detail;

namespace {

void check_q_domain(double nu, int m, int k) {
    if (m < 0) throw std::domain_error("q_poly: requires m >= 0");
    if (k < 0 || k > m) throw std::domain_error("q_poly: requires 0 <= k <= m");
    if (!(2.0 * nu > 2.0 * m)) throw std::domain_error("q_poly: requires 2 nu > 2m");
}

dd::DD dd_gen_binomial(double x, int k) {
    dd::DD r{1.0};
    for (int i = 1; i <= k; ++i) r = dd::div(dd::mul(r, x - k + i), static_cast<double>(i));
    return r;
}

}  // namespace

double q_poly(double nu, int m, int k, double x) {
    check_q_domain(nu, m, k);
    dd::DD sum{0.0};
    for (int j = k; j <= m; ++j) {
        dd::DD t = dd::mul(dd_gen_binomial(2.0 * nu - m - 1.0, j), dd_gen_binomial(m, j));
        t = dd::mul(t, dd_gen_binomial(2.0 * j, j - k));
        t = dd::mul(t, dd::powi(dd::DD{-x}, j));
        sum = dd::add(sum, t);
    }
    return (k % 2 == 0 ? 1.0 : -1.0) * sum.value();
}

double q_poly_3f2(double nu, int m, int k, double x) {
    check_q_domain(nu, m, k);
    double pref = gen_binomial(2.0 * nu - m - 1.0, k) * gen_binomial(m, k) * std::pow(x, k);
    return pref * hyp_poly_3f2(k - m, k + m + 1.0 - 2.0 * nu, k + 0.5, k + 1.0, 2.0 * k + 1.0, -4.0 * x);
}

SignedAtomicMeasure decomposition_measure(double nu, int m, double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::domain_error("decomposition_measure: requires 0 < tau < 1");
    if (m < 0) throw std::domain_error("decomposition_measure: requires m >= 0");
    if (!(2.0 * nu > 2.0 * m)) throw std::domain_error("decomposition_measure: requires 2 nu > 2m");
    const double x = tau / ((1.0 - tau) * (1.0 - tau));
    SignedAtomicMeasure out;
    for (int k = 0; k <= 2 * m; ++k) out.set_atom(k, q_poly(nu, m, std::abs(k - m), x));
    return out;
}

ConvolvedPmf convolve(const TruncatedPmf& a, const SignedAtomicMeasure& b) {
    ConvolvedPmf out;
    for (std::size_t j = 0; j < a.weights.size(); ++j)
        for (const auto& [k, w] : b.atoms())
            out.measure.add_atom(static_cast<std::int64_t>(j) + k, a.weights[j] * w);
    out.tail_error = b.total_variation() * a.tail_bound;
    return out;
}

}  // namespace gnbd
