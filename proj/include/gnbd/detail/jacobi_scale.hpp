#pragma once

#include <cmath>

#include "gnbd/specialfn.hpp"

namespace gnbd::detail {

// Conditioning scale of the binomial-sum expansion: the sum of absolute term
// magnitudes. Near a zero of the polynomial no evaluation route can agree
// beyond roughly 1e-29 * this scale (double-double round-off), so agreement
// checks use it as an absolute floor.
inline double jacobi_defjac_scale(const JacobiSpec& spec, double x) {
    const int n = spec.n;
    double hm = std::abs((x - 1.0) / 2.0);
    double hp = std::abs((x + 1.0) / 2.0);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        s += std::abs(gen_binomial(n + spec.a, k) * gen_binomial(n + spec.b, n - k)) *
             std::pow(hm, n - k) * std::pow(hp, k);
    return s;
}

// Same for the 2F1 route (prefactor times term magnitudes), mirroring the
// implementation's reflection rule.
inline double jacobi_hyp_scale(const JacobiSpec& spec, double x) {
    if (x < 0.0 && spec.b > -1.0) return jacobi_hyp_scale({spec.n, spec.b, spec.a}, -x);
    const int n = spec.n;
    const double z = std::abs((1.0 - x) / 2.0);
    double term = 1.0, s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += term;
        term *= std::abs((static_cast<double>(-n + k)) * (spec.a + spec.b + n + 1 + k) /
                         ((spec.a + 1 + k) * (k + 1))) *
                z;
    }
    return std::abs(pochhammer(spec.a + 1.0, n) / std::tgamma(n + 1.0)) * s;
}

// Absolute noise floor for route-agreement checks: below this level two
// 32-digit evaluations cannot be expected to coincide.
inline double jacobi_agreement_floor(const JacobiSpec& spec, double x) {
    return 1e-29 * std::max(jacobi_defjac_scale(spec, x), jacobi_hyp_scale(spec, x));
}

}  // namespace gnbd::detail
