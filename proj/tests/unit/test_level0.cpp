#include "doctest.h"
#include "msplab/level0.hpp"

using namespace msplab;

TEST_CASE("level-0 direct route") {
    TargetConfig t = target_config(6);
    Level0Direct R = level0_R_direct(t, 11, 5, default_zdepth(11, 5));
    CHECK(level0_expansions(t, R).pass);
    auto e = level0_direct_entries(t, R, 4);
    CHECK(level0_vanishing(e, 11, "v").pass);
    // (R_0)_0^b = delta_b0, (R_1)_1^0 = B
    Generators g = generators(t, 5);
    CHECK(compare(e.at({0, 0, 0}), Series::one(5)).equal);
    CHECK(is_zero(e.at({0, 0, 2})));
    CHECK(compare(e.at({1, 1, 0}), g.B).equal);
}

TEST_CASE("level-0 recursion agrees with the direct route") {
    CHECK(level0_dual_route(target_config(10), 11, 4, 5, default_zdepth(11, 5)).pass);
}

TEST_CASE("level-0 certificates") {
    TargetConfig t = target_config(6);
    DClosureReport dc = dclosure_witnesses(t, 30);
    auto certs = level0_certificates(t, 11, 2, dc.rel);
    for (const auto& c : certs)
        if (c.kind == 0 && c.m == 1 && c.b == 0) CHECK(c.poly == GenPoly::B());
    CHECK(level0_membership(t, 11, 4, 18, 6, dc.rel).pass);
}
