#include "doctest.h"
#include "msplab/level1.hpp"

using namespace msplab;

TEST_CASE("PF expansion: PF_0 vanishes and PF_1 = N D + (N+3)/2 X") {
    for (int N : {7, 11}) {
        auto pf = pf_expand(target_config(6), N, 2);
        CHECK(pf[0].terms.empty());
        CHECK(pf[1].coeff(1) == Poly::constant(N));
        CHECK(pf[1].coeff(0) == frac(N + 3, 2) * Poly::x());
    }
}

TEST_CASE("PF_2 constants") {
    for (int k : {6, 8, 10})
        for (int N : {7, 11, 13}) {
            PF2Constants c = pf2_constants(target_config(k), N);
            CHECK(c.c_k == reference_c(k));
            CHECK(is_zero(c.x2_residual));
        }
}

TEST_CASE("power sums over roots of unity") {
    for (int N : {7, 11})
        for (int s : {1, 3, 5}) CHECK(root_power_sum(N, s) == root_power_sum_field(N, s));
    // sum 1/(zeta^j - 1) = -(N-1)/2
    CHECK(root_power_sum(7, 1) == -3);
}

TEST_CASE("r tower: polynomial, degree <= k") {
    for (int k : {6, 8, 10}) {
        auto r = solve_r_tower(target_config(k), 7, 6);
        CHECK(r[0] == Poly::constant(1));
        for (const auto& p : r) CHECK(p.degree() <= k);
    }
    CHECK(r_entries_degree_check(target_config(6), 11, 14, 6).pass);
}

TEST_CASE("Delta comparison picks one reading") {
    CheckResult c = delta_compare(target_config(6), 7, 4);
    CHECK(c.pass);
    CHECK(c.payload["verdict"] == "k");
    CHECK(c.payload["matching_readings_literal"].empty());
}

TEST_CASE("tail constants") {
    for (int k : {6, 8, 10}) {
        TailReport tr = tail_report(target_config(k), 11, 3);
        CHECK(tr.C_k == reference_C(k));
        CHECK(tr.z1_vanishes);
        CHECK(tr.closed == Rat(-1) * tr.kappa);
    }
    CHECK(reference_C(6) == frac(23, 72));
}

TEST_CASE("level-1 recursion against the direct route") {
    CHECK(level1_dual_route(target_config(8), 7, 10, 3, 3).pass);
}
