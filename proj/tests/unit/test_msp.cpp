#include "doctest.h"
#include "msplab/msp.hpp"

using namespace msplab;

TEST_CASE("Picard-Fuchs operator kills I^M, and a wrong ordinary set does not") {
    for (int k : {6, 8, 10}) CHECK(pf_check(target_config(k), 7, 4).pass);
    std::vector<int> mutated = {1, 2, 3, 5, 6};
    CHECK_FALSE(pf_check(target_config(6), 7, 4, &mutated).pass);
}

TEST_CASE("S^M from A^M") {
    TargetConfig t = target_config(6);
    int top = default_zdepth(7, 3);
    SMMatrix S = solve_SM(t, 7, 3, top);
    CHECK(sm_column0(t, S, top).pass);
    CHECK(sm_wrap_residual(S, "w").pass);
    CHECK(symplectic_check(t, S).pass);
    // band constants recovered from the wrap residual alone
    CHECK(band_oracle(t, 7).pass);
    // a wrong band constant leaves a residual
    SMMatrix bad = solve_SM(t, 7, 3, top, {Rat(360), Rat(2772), Rat(5401)});
    CHECK_FALSE(sm_wrap_residual(bad, "w").pass);
}

TEST_CASE("specialized entries") {
    for (int k : {6, 8}) CHECK(specialized_checks(target_config(k), 7, 3 * k).pass);
    TargetConfig t = target_config(6);
    // S_{1;0} = 1
    auto e = specialize_S_alpha_ring(t, 7, 1, 1, 4);
    QuotientRing T = QuotientRing::tring(7);
    CHECK(e[0].coeffs[0] == T.one());
    for (int d = 1; d <= 4; ++d) CHECK(QuotientRing::is_zero(e[0].coeffs[d]));
}

TEST_CASE("three-point degree bound") {
    CHECK(degree_bound_check(target_config(6), 7, 18).pass);
    CheckResult w = two_point_checks(target_config(6), 7, 3);
    CHECK(w.pass);
    CHECK(w.payload["contraction_1x1_entries"].get<int>() > 0);
}
