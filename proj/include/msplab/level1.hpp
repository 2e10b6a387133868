#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "msplab/pfop.hpp"
#include "msplab/report.hpp"
#include "msplab/series.hpp"
#include "msplab/targets.hpp"

namespace msplab {

struct NoPolynomialSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeBoundViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z^m coefficients PF_m (m = 0..m_max) of
// L^{-5}(L^{-N} D_L^N - (1 - X)) D_L^5 - (X / k^5) L^{-5} prod_{j ordinary}(k D_L + j z),
// D_L = z D + L, D L = L X / N. Every term carries L^{-m}, which is asserted.
std::vector<PFOperator> pf_expand(const TargetConfig& t, int N, int m_max);
// PF_m with D -> D - s X
std::vector<PFOperator> pf_tilde(const std::vector<PFOperator>& pf, int N);

// read off the D^0 part of the shifted PF_2
struct PF2Constants {
    Rat c_k;          // -(X coefficient) - N^2/12 - N
    Rat x2_residual;  // X^2 coefficient minus N^2/12 + 25N/24 + 35/12 + 47/(24N)
};
PF2Constants pf2_constants(const TargetConfig& t, int N);

// r_0 = 1, N D r_m - m X r_m = P_m in Q[Y]
std::vector<Poly> solve_r_tower(const TargetConfig& t, int N, int m_max);

// sum_{j=1}^{N-1} (zeta^j - 1)^{-s} for zeta a primitive N-th root of unity
Rat root_power_sum(int N, int s);
// same sum by explicit inverses in Q[t]/(Phi_{2N}(t)), zeta = t^2
Rat root_power_sum_field(int N, int s);
// coefficients of u^m in exp(sum_j B_2j/(2j(2j-1)) [sum_i (-a_i)^{1-2j} + mid^{1-2j} + S_{2j-1}] u^{2j-1})
std::vector<Rat> delta_coefficients(const TargetConfig& t, int N, int m_max, const Rat& mid);

// r_m(1) against delta_m under both readings of the middle weight (k or r) and both
// parity conventions (delta_m, or (-1)^m delta_m)
CheckResult delta_compare(const TargetConfig& t, int N, int m_max);

// (R_m)_j in Q[Y], m <= m_max, j <= j_max, by the entry recursion
std::map<std::pair<int, int>, Poly> r_entries_level1(const TargetConfig& t, int N, int j_max, int m_max);
CheckResult r_entries_degree_check(const TargetConfig& t, int N, int j_max, int m_max);
// L^{s+m-j} [z^m] R(z)* p^j |pt computed from e^{-tau/z} Delta (I^M/z)|pt, as q-series
std::map<std::pair<int, int>, Series> r_entries_direct(const TargetConfig& t, int N, int j_max, int m_max, int order);
CheckResult level1_dual_route(const TargetConfig& t, int N, int j_max, int m_max, int order);

struct TailReport {
    Poly kappa;         // normalized z^2 coefficient of T|pt, as a polynomial in Y
    Poly closed;        // (N/24 + C_k) + ((Y-1)/N)(N^2/12 + 23N/24 + 47/24)
    Rat C_k;            // recovered constant
    bool z1_vanishes;   // T - z(1 - L^{-s}) = O(z^2) on the direct route
};
TailReport tail_report(const TargetConfig& t, int N, int order);
CheckResult tail_constants(const TargetConfig& t, const std::vector<int>& Ns, int order);

// reference C_k and c_k
Rat reference_C(int k);
Rat reference_c(int k);

}  // namespace msplab
