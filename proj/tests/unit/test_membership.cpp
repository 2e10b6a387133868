#include "doctest.h"
#include "msplab/membership.hpp"

using namespace msplab;

TEST_CASE("find_polynomial basics") {
    Generators g = generators(target_config(6), 20);
    GenSeriesTable tab(g);
    MembershipCertificate c = find_polynomial(g.Y, tab, 1, 8);
    CHECK(c.status == CertStatus::certified);
    CHECK(c.poly == GenPoly::Y());
    Series yuk = g.I0 * g.I0 * g.I11 * g.I11 * g.I22;
    CHECK(find_polynomial(yuk, tab, 1, 8).poly == GenPoly::Y());
    CHECK_THROWS_AS(find_polynomial(g.Y, tab, 3, 8), InsufficientOrder);
    // matches the window, fails the guard
    Series s = Series::one(20);
    s[20] = 1;
    CHECK_THROWS_AS(find_polynomial(s, tab, 0, 2), GuardFailed);
    CHECK(find_polynomial(g.Y, tab, 1, 0).status == CertStatus::underdetermined);
    CHECK(find_polynomial(g.A_m(2), tab, 1, 8).status == CertStatus::refuted_at_degree);
}

TEST_CASE("certificate json") {
    Generators g = generators(target_config(8), 12);
    GenSeriesTable tab(g);
    json j = find_polynomial(g.Y, tab, 1, 4).to_json(8);
    CHECK(j["target"] == 8);
    CHECK(j["monomials"][0]["exponents"] == json::array({0, 0, 0, 0, 1}));
    CHECK(j["monomials"][0]["coeff"] == "1/1");
    CHECK(j["guard_order"] == 4);
}

TEST_CASE("D-closure witnesses") {
    for (int k : {6, 8, 10}) {
        DClosureReport r = dclosure_witnesses(target_config(k), 30);
        CHECK(r.check.pass);
        CHECK(r.certs.size() == 5);
    }
    CHECK_THROWS_AS(dclosure_witnesses(target_config(6), 20), InsufficientOrder);
}
