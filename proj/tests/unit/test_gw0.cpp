#include "doctest.h"
#include "msplab/gw0.hpp"
#include "msplab/membership.hpp"

using namespace msplab;

TEST_CASE("I0 from factorial ratios") {
    // (kd)! / prod (a_i d)!
    Generators g = generators(target_config(6), 3);
    CHECK(g.I0[1] == 360);
    CHECK(g.I0[2] == Rat(factorial(12) / (factorial(2) * factorial(2) * factorial(2) * factorial(2) * factorial(4))));
    Generators g10 = generators(target_config(10), 2);
    CHECK(g10.I0[1] == Rat(factorial(10) / (factorial(2) * factorial(5))));
}

TEST_CASE("yukawa identity and mutation") {
    for (int k : {6, 8, 10}) CHECK(verify_yukawa_identity(target_config(k), 30).pass);
    CheckResult m = verify_yukawa_identity(target_config(6), 30, 5);
    CHECK_FALSE(m.pass);
    REQUIRE(m.first_failure);
    CHECK(m.first_failure->find("5") != std::string::npos);
}

TEST_CASE("genus-0 invariants match known instanton numbers") {
    // n_1 for the degree 6, 8, 10 weighted hypersurfaces; N_{0,2} = n_2 + n_1/8
    Genus0Report r6 = genus0_invariants(target_config(6), 2);
    CHECK(r6.N_yukawa[1] == 7884);
    CHECK(r6.N_yukawa[2] == Rat(6028452) + Rat(7884) / 8);
    CHECK(r6.N_j2[2] == r6.N_yukawa[2]);
    CHECK(genus0_invariants(target_config(8), 1).N_yukawa[1] == 29504);
    CHECK(genus0_invariants(target_config(10), 1).N_yukawa[1] == 231200);
}

TEST_CASE("S^Z connection: derived entries pass, alternative display fails") {
    Generators g = generators(target_config(6), 10);
    CHECK(sz_connection_residual(s_z_matrix(g), g, "d").pass);
    CHECK_FALSE(sz_connection_residual(s_z_matrix_display(g), g, "p").pass);
}

TEST_CASE("P recursion") {
    DClosureReport dc = dclosure_witnesses(target_config(6), 30);
    GenPoly P4 = p_recursion(GenPoly::constant(1), 0, 3, dc.rel);
    GenPoly want = GenPoly::Y() - GenPoly::constant(1) - Rat(2) * GenPoly::B() - Rat(3) * GenPoly::A();
    CHECK(P4 == want);
    CHECK(p_recursion(GenPoly::constant(1), 1, 1, dc.rel) == Rat(-1) * GenPoly::A());
    CHECK(genus0_chain_check(target_config(6), 30, dc.rel).pass);
}
