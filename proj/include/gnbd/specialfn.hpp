#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace gnbd {

// Convergence failures (e.g. the tridiagonal eigensolver) are distinct from
// domain errors so the CLI can map them to a separate exit code.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Rising factorial (x)_k = x(x+1)...(x+k-1), (x)_0 = 1. Exact zero for
/// negative-integer x with k > -x.
double pochhammer(double x, int k);

/// Generalized binomial coefficient binom(x, k) = x(x-1)...(x-k+1)/k!.
double gen_binomial(double x, int k);

struct JacobiSpec {
    int n;     // degree, n >= 0
    double a;  // first parameter
    double b;  // second parameter
};

/// P_n^{(a,b)}(x) via the binomial-sum expansion. Valid for any real a, b
/// (negative-integer a degenerates gracefully). Internally double-double.
double jacobi_eval(const JacobiSpec& spec, double x);

/// Same expansion at a complex argument (used by the moment generating
/// function off the real axis). Plain double with compensated accumulation.
std::complex<double> jacobi_eval(const JacobiSpec& spec, std::complex<double> x);

/// P_n^{(a,b)}(x) via the terminating 2F1 representation
///   (a+1)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2).
/// Independent evaluation route; requires a > -1.
double jacobi_eval_hyp(const JacobiSpec& spec, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_deriv(const JacobiSpec& spec, double x);

/// ln of the leading coefficient (n+a+b+1)_n / (2^n n!); positive for
/// a, b > -1, n >= 1.
double jacobi_leading_coeff_log(const JacobiSpec& spec);

struct ZeroSet {
    std::vector<double> zeros;    // strictly increasing, inside (-1, 1)
    int degree = 0;               // == zeros.size()
    double residual_bound = 0.0;  // max_i |P(x_i)| / leading coefficient
};

/// All n zeros of P_n^{(a,b)} for a, b > -1 (orthogonality regime):
/// Golub-Welsch tridiagonal eigenvalues plus one Newton polish per root.
ZeroSet jacobi_zeros(const JacobiSpec& spec);

/// Laguerre polynomial L_n^{(a)}(x) = (a+1)_n/n! 1F1(-n; a+1; x).
double laguerre_eval(int n, double a, double x);
std::complex<double> laguerre_eval(int n, double a, std::complex<double> x);

/// Terminating 3F2(a1, a2, a3; b1, b2; x) with a1 a nonpositive integer.
/// Throws std::domain_error if a bottom parameter hits a nonpositive integer
/// before the series terminates.
double hyp_poly_3f2(int a1, double a2, double a3, double b1, double b2, double x);

/// Relative defect of the Legendre duplication formula at x > 0; a built-in
/// self-test of log_gamma (identically 0 in exact arithmetic).
double duplication_check(double x);

}  // namespace gnbd
