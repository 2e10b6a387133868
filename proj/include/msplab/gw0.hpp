#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "msplab/genpoly.hpp"
#include "msplab/ifun.hpp"
#include "msplab/report.hpp"

namespace msplab {

struct MirrorMapNotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConnectionResidualNonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p_k I22 / I11
Series yukawa(const TargetConfig& t, int order);
Series yukawa(const TargetConfig& t, const Generators& g);

// I0^2 I11^2 I22 - Y; `perturb` adds c q^e to I22 (mutation testing)
CheckResult verify_yukawa_identity(const TargetConfig& t, int order, int perturb_exp = -1);

struct Genus0Report {
    Series yukawa_q, yukawa_Q;
    Series Q_of_q, q_of_Q;
    std::vector<Rat> N_yukawa;  // index d, entry 0 unused
    std::vector<Rat> N_j2;      // second route through the H^2 component
};
Genus0Report genus0_invariants(const TargetConfig& t, int dmax);

// e[row][col][p] is the coefficient of z^{-p}, basis 1, H, H^2, H^3
struct SZMatrix {
    std::array<std::array<std::array<Series, 4>, 4>, 4> e;
};
SZMatrix s_z_matrix(const Generators& g);
// the alternative display form (J1' = I11, J2' = J1 + D J2)
SZMatrix s_z_matrix_display(const Generators& g);
// (H + zD) S* - S* A^Z, all z-exponents
CheckResult sz_connection_residual(const SZMatrix& S, const Generators& g, const std::string& id);

// P_{g,n+1} = (D + (g-1)(2B + 1 - Y) - n A) P_{g,n}
GenPoly p_recursion(const GenPoly& P, int g, int n, const DRelations& rel);
Series p_recursion(const Series& P, int g, int n, const Generators& gens);
// I0^2 I11^n / (p_k Y) (Q d/dQ)^n F_0 pulled back to q
Series p_genus0_raw(const TargetConfig& t, const Generators& g, int n);

}  // namespace msplab
