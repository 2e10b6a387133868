#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "msplab/genpoly.hpp"
#include "msplab/ifun.hpp"
#include "msplab/report.hpp"
#include "msplab/targets.hpp"

namespace msplab {

struct InsufficientOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GuardFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CertStatus { certified, refuted_at_degree, underdetermined };
std::string to_string(CertStatus s);

struct MembershipCertificate {
    GenPoly poly;
    int degree_bound = 0;
    int matched_order = 0;  // fitted through q^matched_order
    int guard_order = 0;    // further coefficients checked
    CertStatus status = CertStatus::underdetermined;

    json to_json(int k) const;
};

// fit s against the monomials of total degree <= degree_bound; the last `guard`
// coefficients of s are held out and must be reproduced
MembershipCertificate find_polynomial(const Series& s, GenSeriesTable& gens, int degree_bound, int guard);
// same with an explicit monomial list (kept in the given order)
MembershipCertificate find_polynomial(const Series& s, GenSeriesTable& gens, const std::vector<Mono>& monos,
                                      int degree_bound, int guard);

struct DClosureReport {
    CheckResult check;
    DRelations rel;  // A2 and B4 certificates, usable by D on GenPoly
    std::vector<std::pair<std::string, MembershipCertificate>> certs;
};
// DA, DB2, DB3, A2, B4 at degree 2
DClosureReport dclosure_witnesses(const TargetConfig& t, int order, int guard = 8);

// A, B, B2, B3, Y, their D's, A2, B4 and I0^2 I11^2 I22 by name
const std::vector<std::string>& named_series_list();
Series named_series(const Generators& g, const std::string& name);

// P_{0,3} = 1, then P_{0,4}, P_{0,5} by the recursion on GenPoly and on series,
// both compared with the direct derivative of the Yukawa coupling
CheckResult genus0_chain_check(const TargetConfig& t, int order, const DRelations& rel);

}  // namespace msplab
