#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "msplab/genpoly.hpp"
#include "msplab/ifun.hpp"
#include "msplab/membership.hpp"
#include "msplab/report.hpp"

namespace msplab {

struct ExpansionWindowViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VanishingPatternViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MembershipFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// phi_b = I0 I11 .. I_bb H^b (I33 = I11), phi^b = -t^N / (p_k I0 .. I_bb) H^{3-b}, t^N = -1
struct NormalizedBasis {
    std::array<Series, 4> phi_scale, dual_scale;
};
NormalizedBasis normalized_basis(const TargetConfig& t, const Generators& g);

// R(z)* p^j |_Z = (S^Z*)^{-1} S^M* p^j |_Z; r[j][b] maps z-exponent to the H^b coefficient
struct Level0Direct {
    int N = 0, order = 0, top = 0;
    int valid = 0;  // exponents <= valid are exact
    std::vector<std::array<std::map<int, Series>, 4>> r;
    Series get(int j, int b, int m) const;
};
Level0Direct level0_R_direct(const TargetConfig& t, int N, int order, int zdepth);
// R*1|_Z = I0 + O(z^{N-3}), R*p|_Z = z D I0 + I0 I11 H + O(z^{N-2}), no negative powers;
// with `raise` set a violation throws ExpansionWindowViolated
CheckResult level0_expansions(const TargetConfig& t, const Level0Direct& R, bool raise = false);

using Level0Key = std::tuple<int, int, int>;  // (m, j, b)
using Level0REntries = std::map<Level0Key, Series>;

// (R_m)_j^b by the recursion, j = 0..N+3, m <= m_max < N-3
Level0REntries r_entries_level0(const TargetConfig& t, int N, int m_max, int order);
// normalized entries of the direct route in the exact window
Level0REntries level0_direct_entries(const TargetConfig& t, const Level0Direct& R, int m_max);
CheckResult level0_vanishing(const Level0REntries& e, int N, const std::string& id);
CheckResult level0_dual_route(const TargetConfig& t, int N, int m_max, int order, int zdepth);

// the same recursion over Q[A, B, B2, B3, Y]; kind 0 is (R_m)_{b+m}^b, kind 1 is
// (Y / t^N)(R_m)_{b+N+m}^b
struct Level0Certificate {
    int m = 0, b = 0, kind = 0;
    GenPoly poly;
};
std::vector<Level0Certificate> level0_certificates(const TargetConfig& t, int N, int m_max, const DRelations& rel);
// every surviving entry against its certificate through `order`; the last `guard`
// coefficients are not used by the solver attempts reported alongside
CheckResult level0_membership(const TargetConfig& t, int N, int m_max, int order, int guard, const DRelations& rel);

}  // namespace msplab
