#pragma once

// Central numeric tolerances. Every identity check and truncation control in
// the library reads from here so CI has a single knob.

namespace gnbd {

struct Tolerances {
    // special functions
    double duplication_rel = 1e-12;
    double jacobi_routes_rel = 1e-11;
    double jacobi_symmetry_rel = 1e-11;
    double index_swap_rel = 1e-10;
    double zero_reconstruction_rel = 1e-9;

    // distribution
    double pmf_normalization = 1e-9;
    double pmf_truncation_weight = 1e-15;
    double mgf_series_abs = 1e-10;
    double mgf_routes_abs = 1e-10;
    double mgf_singularity_switch = 1e-6;
    double moments_rel = 1e-8;
    double mandel_q_zero = 1e-10;
    double mandel_regime_q = 1e-12;
    double g1_cancellation_rel = 1e-10;
    double srivastava_rao_abs = 1e-8;

    // decomposition
    double decomposition_abs = 1e-10;
    double q_poly_3f2_rel = 1e-10;
    double linearization_abs = 1e-11;

    // levy / idd
    double levy_truncation = 1e-12;
    double a_identities_abs = 1e-10;
    double a3_mass_abs = 1e-12;
    double prod_identity_abs = 1e-12;
    double lk_reproduction_abs = 1e-8;
    double a0_real_form_abs = 1e-10;
    double idcf_ratio_abs = 1e-9;
    double divisibility_abs = 1e-10;
};

inline constexpr Tolerances kTol{};

}  // namespace gnbd
