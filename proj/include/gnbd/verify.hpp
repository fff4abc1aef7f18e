#pragma once

#include <string>
#include <vector>

#include "gnbd/distribution.hpp"
#include "gnbd/tolerances.hpp"

namespace gnbd {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    double tol = 0.0;
    std::string note;
};

/// Constants whose printed values the numerical cross-checks overturn,
/// reported alongside the resolved values.
struct ErratumConstants {
    double nb_constant_printed = 1.0;
    double nb_constant_resolved = 0.0;  // 2 nu R^2
    double a2_sign_printed = -1.0;
    double a2_sign_resolved = 1.0;
    double lambda_printed = 0.0;  // NaN when m = 0
    double lambda_corrected = 0.0;
    double idcf_ratio_measured = 0.0;  // NaN when m = 0
    double idcf_ratio_expected = 0.0;
    double q0_center_atom = 0.0;  // general-formula value at the given params
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    ErratumConstants constants;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the full identity suite (duplication, dual Jacobi routes, index swap,
/// Srivastava-Rao, decomposition, A1-A3, prod, LK reproduction, id-CF
/// constant, contraction, ...) anchored at the given parameters.
VerificationReport run_verification(const GnbdParams& p, const Tolerances& tol = kTol);

}  // namespace gnbd
