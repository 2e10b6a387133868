#include "msplab/gw0.hpp"

namespace msplab {

Series yukawa(const TargetConfig& t, const Generators& g) { return t.p_k * divide(g.I22, g.I11); }

Series yukawa(const TargetConfig& t, int order) { return yukawa(t, generators(t, order)); }

CheckResult verify_yukawa_identity(const TargetConfig& t, int order, int perturb_exp) {
    Generators g = generators(t, order);
    Series I22 = g.I22;
    if (perturb_exp >= 0 && perturb_exp <= order) I22[perturb_exp] += 1;
    Series lhs = g.I0 * g.I0 * g.I11 * g.I11 * I22;
    SeriesDiff diff = compare(lhs, g.Y);
    CheckResult r;
    r.id = "yukawa.k" + std::to_string(t.k);
    r.pass = diff.equal;
    r.order = diff.order;
    if (!diff.equal) r.first_failure = "gw-genus0/verify_yukawa_identity/q^" + std::to_string(diff.first_mismatch);
    r.payload["k"] = t.k;
    if (perturb_exp >= 0) r.payload["perturbation"] = "I22 += q^" + std::to_string(perturb_exp);
    return r;
}

Genus0Report genus0_invariants(const TargetConfig& t, int dmax) {
    Generators g = generators(t, dmax);
    if (g.I0[0] != 1 || !is_zero(g.I1[0])) throw MirrorMapNotInvertible("mirror map needs I0(0)=1, I1(0)=0");
    Genus0Report rep;
    rep.yukawa_q = yukawa(t, g);
    rep.Q_of_q = Series::q(dmax) * exp_series(g.J1);
    rep.q_of_Q = revert(rep.Q_of_q);
    rep.yukawa_Q = compose(rep.yukawa_q, rep.q_of_Q);
    Series Xq = g.J2 - Rat(1, 2) * (g.J1 * g.J1);
    Series XQ = compose(Xq, rep.q_of_Q);
    rep.N_yukawa.assign(dmax + 1, Rat(0));
    rep.N_j2.assign(dmax + 1, Rat(0));
    for (int d = 1; d <= dmax; ++d) {
        rep.N_yukawa[d] = rep.yukawa_Q[d] / Rat(d * d * d);
        rep.N_j2[d] = t.p_k * XQ[d] / Rat(d);
    }
    return rep;
}

SZMatrix s_z_matrix(const Generators& g) {
    int n = g.order;
    SZMatrix S;
    for (auto& row : S.e)
        for (auto& col : row)
            for (auto& s : col) s = Series(n);
    for (int i = 0; i < 4; ++i) S.e[i][i][0] = Series::one(n);
    Series c = divide(g.J1 + D(g.J2), g.I11);
    Series e = divide(g.J2 + D(g.J3), g.I11);
    Series f = divide(c + D(e), g.I22);
    S.e[1][0][1] = g.J1;
    S.e[2][0][2] = g.J2;
    S.e[3][0][3] = g.J3;
    S.e[2][1][1] = c;
    S.e[3][1][2] = e;
    S.e[3][2][1] = f;
    return S;
}

SZMatrix s_z_matrix_display(const Generators& g) {
    int n = g.order;
    SZMatrix S;
    for (auto& row : S.e)
        for (auto& col : row)
            for (auto& s : col) s = Series(n);
    for (int i = 0; i < 4; ++i) S.e[i][i][0] = Series::one(n);
    Series J1p = g.I11;
    Series J2p = g.J1 + D(g.J2);
    S.e[1][0][1] = J1p;
    S.e[2][1][1] = J2p;
    S.e[3][2][1] = J1p;
    S.e[2][0][2] = g.J2;
    S.e[3][1][2] = divide(J2p, J1p) * g.J1 - g.J2;
    S.e[3][0][3] = g.J3;
    return S;
}

CheckResult sz_connection_residual(const SZMatrix& S, const Generators& g, const std::string& id) {
    int n = g.order;
    const Series* sub[3] = {&g.I11, &g.I22, &g.I11};
    CheckResult r;
    r.id = id;
    r.order = n;
    r.pass = true;
    // exponent z^{1-p'} indexed by p' = 0..4 where z^{-p} -> p
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
            for (int p = -1; p <= 3; ++p) {
                Series res(n);
                // H S*: component row takes component row-1
                if (p >= 0 && row >= 1) res += S.e[row - 1][col][p];
                // z D: z^{-(p+1)} -> z^{-p}
                if (p + 1 <= 3) res += D(S.e[row][col][p + 1]);
                // S* A^Z
                if (p >= 0 && col <= 2) res -= S.e[row][col + 1][p] * (*sub[col]);
                if (!is_zero(res) && r.pass) {
                    r.pass = false;
                    int q = 0;
                    while (is_zero(res[q])) ++q;
                    r.first_failure = "gw-genus0/s_z_matrix/entry(" + std::to_string(row) + "," + std::to_string(col) +
                                      ")/z^" + std::to_string(-p) + "/q^" + std::to_string(q);
                }
            }
    return r;
}

GenPoly p_recursion(const GenPoly& P, int g, int n, const DRelations& rel) {
    GenPoly op = Rat(g - 1) * (Rat(2) * GenPoly::B() + GenPoly::constant(1) - GenPoly::Y()) - Rat(n) * GenPoly::A();
    return D(P, rel) + op * P;
}

Series p_recursion(const Series& P, int g, int n, const Generators& gens) {
    Series one = Series::one(gens.order);
    Series op = Rat(g - 1) * (Rat(2) * gens.B + one - gens.Y) - Rat(n) * gens.A;
    return D(P) + op * P;
}

Series p_genus0_raw(const TargetConfig& t, const Generators& g, int n) {
    // (Q d/dQ) = I11^{-1} D on pulled-back functions
    Series f = yukawa(t, g);
    Series inv11 = inverse(g.I11);
    for (int i = 3; i < n; ++i) f = inv11 * D(f);
    Series pref = g.I0 * g.I0 * pow(g.I11, n) * inverse(t.p_k * g.Y);
    return pref * f;
}

}  // namespace msplab
