#pragma once

#include "gnbd/atomic_measure.hpp"
#include "gnbd/distribution.hpp"

namespace gnbd {

/// Coefficient polynomial of the atomic perturbation,
///   Q_k(x) = (-1)^k sum_{j=k}^m binom(2nu-m-1,j) binom(m,j) binom(2j,j-k) (-x)^j,
/// for 0 <= k <= m. The k = 0 instance is this same sum (the distribution's
/// convolution identity forces it; the ":= 1" convention breaks total mass).
double q_poly(double nu, int m, int k, double x);

/// Independent route: Q_k through a terminating 3F2,
///   binom(2nu-m-1,k) binom(m,k) x^k 3F2(k-m, k+m+1-2nu, k+1/2; k+1, 2k+1; -4x).
double q_poly_3f2(double nu, int m, int k, double x);

/// The finite signed measure of the decomposition, shifted by m: atoms at
/// k in {0,...,2m} with weight Q_{|k-m|}(tau/(1-tau)^2). Convolving it with
/// the m = 0 distribution reproduces the level-m pmf (R = 1 regime).
SignedAtomicMeasure decomposition_measure(double nu, int m, double tau);

struct ConvolvedPmf {
    SignedAtomicMeasure measure;
    double tail_error = 0.0;  // total_variation(b) x tail_bound(a)
};

/// Convolution of a truncated pmf with a finite signed measure; exact on the
/// overlapping support, with the propagated truncation error reported.
ConvolvedPmf convolve(const TruncatedPmf& a, const SignedAtomicMeasure& b);

}  // namespace gnbd
