#include <doctest.h>

#include <cmath>

#include "gnbd/verify.hpp"

using namespace gnbd;

TEST_CASE("full identity suite passes at the reference parameters") {
    VerificationReport rep = run_verification({2.0, 0.05, 1, 1.0});
    for (const auto& c : rep.checks) {
        INFO(c.name, " err=", c.max_err, " tol=", c.tol);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 30);

    // resolved erratum constants
    CHECK(rep.constants.nb_constant_printed == 1.0);
    CHECK(rep.constants.nb_constant_resolved == doctest::Approx(4.0));
    CHECK(rep.constants.a2_sign_resolved == 1.0);
    CHECK(rep.constants.lambda_corrected ==
          doctest::Approx(0.51931457678218071429).epsilon(1e-12));
    CHECK(rep.constants.lambda_printed ==
          doctest::Approx(0.36543469361952911401).epsilon(1e-12));
    CHECK(rep.constants.idcf_ratio_measured ==
          doctest::Approx(rep.constants.idcf_ratio_expected).epsilon(1e-9));
}

TEST_CASE("suite also passes at an m = 0 and an R != 1 anchor") {
    CHECK(run_verification({1.0, 0.5, 0, 1.0}).all_pass());
    CHECK(run_verification({5.5, 0.3, 2, 3.0}).all_pass());
}

TEST_CASE("tolerance overrides propagate") {
    Tolerances strict{};
    strict.lk_reproduction_abs = 1e-30;  // absurdly tight: must fail
    VerificationReport rep = run_verification({2.0, 0.05, 1, 1.0}, strict);
    bool lk_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "lk_reproduction") lk_failed = !c.pass;
    CHECK(lk_failed);
}
