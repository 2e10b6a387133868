#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "msplab/ifun.hpp"
#include "msplab/poly.hpp"
#include "msplab/quotient.hpp"
#include "msplab/report.hpp"

namespace msplab {

struct RoutesDisagree : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZNotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct StateSpace {
    int N = 0;
    Rat p_k;
    QuotientRing ring;
    std::vector<std::vector<Rat>> eta, eta_inv;
    // lambda(p^s) for s = 0 .. 2(N+3)
    std::vector<Rat> lambda_pow;

    Rat lambda(const Vec& x) const;
    Rat pair(const Vec& x, const Vec& y) const;
    // phi^j with (phi_i, phi^j) = delta_ij, from eta^{-1}
    Vec dual(int j) const;
    // closed forms p^{3-j}(p^N + 1)/p_k (j <= 3) and p^{N+3-j}/p_k (j >= 4)
    Vec dual_closed(int j) const;
};
StateSpace state_pairing(const TargetConfig& t, int N);

// entries of A^M are polynomials in q of degree <= 1; column j holds p * p^j
struct AMMatrix {
    int N = 0;
    std::vector<std::vector<Poly>> m;  // m[row][col]
};
AMMatrix connection_AM(const TargetConfig& t, int N);
AMMatrix connection_AM(int N, const std::array<Rat, 3>& c);
CheckResult am_classical_limit(const TargetConfig& t, int N);

// columns S*(z) p^j, j = 0..N+3, over Q[p]/(p^4(p^N+1))
struct SMMatrix {
    int N = 0;
    int order = 0;
    std::vector<LaurentBlock> cols;
    LaurentBlock wrap;  // D_p C_{N+3} - band_4 C_4, zero when A^M is right
};
SMMatrix solve_SM(const TargetConfig& t, int N, int order, int top);
SMMatrix solve_SM(const TargetConfig& t, int N, int order, int top, const std::array<Rat, 3>& c);

CheckResult sm_column0(const TargetConfig& t, const SMMatrix& S, int top);
CheckResult sm_wrap_residual(const SMMatrix& S, const std::string& id);
// (C_i(z), C_j(-z)) = eta_ij through the valid window
CheckResult symplectic_check(const TargetConfig& t, const SMMatrix& S);
// re-derive the three band constants from the q^1 wrap residual
CheckResult band_oracle(const TargetConfig& t, int N);

// D_p^5 (D_p^N + 1) - (r/k^5) q prod_{j ordinary}(k D_p + j z) applied to I^M
CheckResult pf_check(const TargetConfig& t, int N, int order, const std::vector<int>* ordinary_override = nullptr);

// restriction of column i to pt_alpha at z = k t_alpha / a; q-coefficients in Q[t]/(t^N+1)
struct SpecializedEntry {
    int a = 0, i = 0, alpha = 0;
    std::vector<Vec> coeffs;  // q^0 .. q^order
    int degree() const;
};
// route B: every factor evaluated in the ring, column recursion in the ring
std::vector<SpecializedEntry> specialize_S_alpha_ring(const TargetConfig& t, int N, int a, int alpha, int order);
// route A: scalar tower g_i with entry = t_alpha^i g_i
std::vector<Series> specialize_S_scalar(const TargetConfig& t, int N, int a, int order);
// closed-form i = 0 coefficient derived from the I-function restriction
Rat specialized_term(const TargetConfig& t, int N, int a, int d);
// closed-form i = 0 coefficient in its displayed form, with (a/(kt))^{Nd} read at t^N = -1
Rat specialized_term_display(const TargetConfig& t, int N, int a, int d);
Vec t_alpha(const QuotientRing& T, int alpha);
// both routes, rotation, degree bounds and the unit entry for a <= a_max
CheckResult specialized_checks(const TargetConfig& t, int N, int a_max);

// genus-0 three-point functions <p^a, p^b, p^c> as polynomials in q
std::vector<std::vector<std::vector<Poly>>> three_point(const TargetConfig& t, int N);
// q-degree <= -1 + (a+b+c-3)/N for every triple; the literal reading on
// specialized entries is reported in the payload
CheckResult degree_bound_check(const TargetConfig& t, int N, int a_max);

// -sum eta^{ij} (C_i(-z1), phi_a)(C_j(-z2), phi_b)/(z1+z2). w[0][i][j] is minus the
// q^0 numerator at z1^{lead+i} z2^{lead+j}; for d >= 1, w[d][i][j] is the coefficient
// of q^d z1^{lead+i} z2^{lead+j-1}
struct TwoPoint {
    int lead = 0, top = 0, order = 0;
    std::vector<std::vector<std::vector<Rat>>> w;
};
TwoPoint two_point_W(const TargetConfig& t, const SMMatrix& S, int a, int b);
CheckResult two_point_checks(const TargetConfig& t, int N, int order);

}  // namespace msplab
