#include "msplab/level0.hpp"

#include "msplab/gw0.hpp"
#include "msplab/msp.hpp"

namespace msplab {

namespace {

std::array<Series, 4> pi_products(const Generators& g) {
    std::array<Series, 4> p;
    p[0] = g.I0;
    p[1] = p[0] * g.I11;
    p[2] = p[1] * g.I22;
    p[3] = p[2] * g.I11;
    return p;
}

// c_j for j = N .. N+3, zero elsewhere
Rat band_c(const TargetConfig& t, int N, int j) {
    static const int idx[4] = {0, 1, 2, 1};
    if (j < N || j > N + 3) return 0;
    return Rat(t.c_vec[idx[j - N]]);
}

std::string key_str(int m, int j, int b) {
    return "(m=" + std::to_string(m) + ",j=" + std::to_string(j) + ",b=" + std::to_string(b) + ")";
}

}  // namespace

NormalizedBasis normalized_basis(const TargetConfig& t, const Generators& g) {
    NormalizedBasis nb;
    nb.phi_scale = pi_products(g);
    for (int b = 0; b < 4; ++b) nb.dual_scale[b] = inverse(t.p_k * nb.phi_scale[b]);
    return nb;
}

Series Level0Direct::get(int j, int b, int m) const {
    auto it = r[j][b].find(m);
    return it == r[j][b].end() ? Series(order) : it->second;
}

Level0Direct level0_R_direct(const TargetConfig& t, int N, int order, int zdepth) {
    check_N(N);
    Generators g = generators(t, order);
    SZMatrix M = s_z_matrix(g);
    SMMatrix S = solve_SM(t, N, order, zdepth);
    Level0Direct R;
    R.N = N;
    R.order = order;
    R.top = zdepth;
    R.valid = zdepth - 3;
    R.r.resize(N + 4);
    for (int j = 0; j < N + 4; ++j) {
        const LaurentBlock& col = S.cols[j];
        std::array<std::map<int, Series>, 4> v;
        for (int e = col.lead; e <= col.top; ++e)
            for (int b = 0; b < 4; ++b) {
                Series s(order);
                bool nz = false;
                for (int d = 0; d <= order; ++d) {
                    s[d] = col.at(e, d)[b];
                    nz = nz || !is_zero(s[d]);
                }
                if (nz) v[b][e] = std::move(s);
            }
        // S^Z* is unipotent lower triangular with z^{-p} entries: forward solve
        auto& u = R.r[j];
        for (int b = 0; b < 4; ++b) {
            u[b] = v[b];
            for (int c = 0; c < b; ++c)
                for (int p = 0; p < 4; ++p) {
                    const Series& mbc = M.e[b][c][p];
                    if (is_zero(mbc)) continue;
                    for (const auto& [e, s] : u[c]) {
                        int ex = e - p;
                        if (ex > zdepth) continue;
                        auto it = u[b].find(ex);
                        if (it == u[b].end()) it = u[b].emplace(ex, Series(order)).first;
                        it->second -= mbc * s;
                    }
                }
            for (auto it = u[b].begin(); it != u[b].end();)
                it = is_zero(it->second) ? u[b].erase(it) : std::next(it);
        }
    }
    return R;
}

CheckResult level0_expansions(const TargetConfig& t, const Level0Direct& R, bool raise) {
    Generators g = generators(t, R.order);
    CheckResult r;
    r.id = "level0.expansions.k" + std::to_string(t.k) + ".N" + std::to_string(R.N);
    r.order = R.order;
    r.pass = true;
    auto fail = [&](const std::string& where) {
        if (r.pass) r.first_failure = "rmatrix-level0/level0_R_direct/" + where;
        r.pass = false;
    };
    int w1 = std::min(R.valid, R.N - 4), wp = std::min(R.valid, R.N - 3);
    Series zero(R.order);
    Series I0I11 = g.I0 * g.I11;
    Series DI0 = D(g.I0);
    for (int b = 0; b < 4; ++b) {
        for (int e = 0; e <= w1; ++e) {
            const Series& want = e == 0 && b == 0 ? g.I0 : zero;
            if (!compare(R.get(0, b, e), want).equal) fail("R*1/H^" + std::to_string(b) + "/z^" + std::to_string(e));
        }
        for (int e = 0; e <= wp; ++e) {
            const Series& want = e == 1 && b == 0 ? DI0 : e == 0 && b == 1 ? I0I11 : zero;
            if (!compare(R.get(1, b, e), want).equal) fail("R*p/H^" + std::to_string(b) + "/z^" + std::to_string(e));
        }
    }
    int neg = 0;
    for (int j = 0; j < R.N + 4; ++j)
        for (int b = 0; b < 4; ++b)
            for (const auto& [e, s] : R.r[j][b])
                if (e < 0) {
                    ++neg;
                    fail("p^" + std::to_string(j) + "/H^" + std::to_string(b) + "/z^" + std::to_string(e));
                }
    r.payload["window_R1"] = w1;
    r.payload["window_Rp"] = wp;
    r.payload["zdepth"] = R.top;
    r.payload["negative_powers"] = neg;
    if (!r.pass && raise) throw ExpansionWindowViolated(*r.first_failure);
    return r;
}

Level0REntries r_entries_level0(const TargetConfig& t, int N, int m_max, int order) {
    check_N(N);
    if (m_max >= N - 3) throw std::invalid_argument("r_entries_level0: m_max < N-3");
    Generators g = generators(t, order);
    auto P = pi_products(g);
    std::array<Series, 4> C;
    for (int b = 0; b < 4; ++b) C[b] = divide(D(P[b]), P[b]);
    Series q = Series::q(order);
    Level0REntries e;
    for (int m = 0; m <= m_max; ++m)
        for (int j = 0; j < N + 4; ++j)
            for (int b = 0; b < 4; ++b) {
                Series v(order);
                if (j == 0) {
                    if (m == 0 && b == 0) v = Series::one(order);
                } else {
                    if (m >= 1) {
                        const Series& s = e.at({m - 1, j - 1, b});
                        v += D(s) + C[b] * s;
                    }
                    if (b >= 1) v += e.at({m, j - 1, b - 1});
                    Rat c = band_c(t, N, j);
                    if (!is_zero(c)) v -= c * (q * e.at({m, j - N, b}));
                }
                e[{m, j, b}] = std::move(v);
            }
    CheckResult van = level0_vanishing(e, N, "");
    if (!van.pass) throw VanishingPatternViolated(*van.first_failure);
    return e;
}

Level0REntries level0_direct_entries(const TargetConfig& t, const Level0Direct& R, int m_max) {
    if (m_max > R.valid) throw std::invalid_argument("level0_direct_entries: m_max beyond the exact window");
    Generators g = generators(t, R.order);
    auto P = pi_products(g);
    Level0REntries e;
    for (int m = 0; m <= m_max; ++m)
        for (int j = 0; j < R.N + 4; ++j)
            for (int b = 0; b < 4; ++b) e[{m, j, b}] = divide(R.get(j, b, m), P[b]);
    return e;
}

CheckResult level0_vanishing(const Level0REntries& e, int N, const std::string& id) {
    CheckResult r;
    r.id = id;
    r.pass = true;
    int surviving = 0;
    for (const auto& [key, s] : e) {
        auto [m, j, b] = key;
        r.order = s.order();
        bool allowed = ((j - b - m) % N + N) % N == 0;
        if (allowed) {
            surviving += !is_zero(s);
            continue;
        }
        if (!is_zero(s) && r.pass) {
            r.pass = false;
            r.first_failure = "rmatrix-level0/vanishing/" + key_str(m, j, b);
        }
    }
    r.payload["nonzero_allowed_entries"] = surviving;
    r.payload["entries"] = e.size();
    return r;
}

CheckResult level0_dual_route(const TargetConfig& t, int N, int m_max, int order, int zdepth) {
    Level0Direct R = level0_R_direct(t, N, order, zdepth);
    auto dir = level0_direct_entries(t, R, m_max);
    auto rec = r_entries_level0(t, N, m_max, order);
    CheckResult r;
    r.id = "level0.dual_route.k" + std::to_string(t.k) + ".N" + std::to_string(N);
    r.order = order;
    r.pass = true;
    for (const auto& [key, s] : rec) {
        auto df = compare(s, dir.at(key));
        if (!df.equal && r.pass) {
            auto [m, j, b] = key;
            r.pass = false;
            r.first_failure = "rmatrix-level0/r_entries_level0/" + key_str(m, j, b) + "/q^" + std::to_string(df.first_mismatch);
        }
    }
    CheckResult van = level0_vanishing(dir, N, "");
    r.pass = r.pass && van.pass;
    if (!van.pass && !r.first_failure) r.first_failure = van.first_failure;
    r.payload["m_max"] = m_max;
    r.payload["zdepth"] = zdepth;
    r.payload["entries"] = rec.size();
    r.payload["direct_vanishing"] = van.pass;
    return r;
}

std::vector<Level0Certificate> level0_certificates(const TargetConfig& t, int N, int m_max, const DRelations& rel) {
    if (m_max >= N - 3) throw std::invalid_argument("level0_certificates: m_max < N-3");
    const GenPoly A = GenPoly::A(), B = GenPoly::B(), Y = GenPoly::Y(), one = GenPoly::constant(1);
    // D log of I0, I0 I11, I0 I11 I22, I0 I11 I22 I11, using I0^2 I11^2 I22 = Y
    const std::array<GenPoly, 4> C = {B, B + A, Y - one - B - A, Y - one - B};
    const GenPoly Ym1 = Y - one;
    std::map<Level0Key, GenPoly> E, F;  // E for j < N, F = Y E for j >= N-1
    for (int m = 0; m <= m_max; ++m)
        for (int j = 0; j < N; ++j)
            for (int b = 0; b < 4; ++b) {
                GenPoly v;
                if (j == 0) {
                    if (m == 0 && b == 0) v = one;
                } else {
                    if (m >= 1) {
                        const GenPoly& s = E.at({m - 1, j - 1, b});
                        v = v + D(s, rel) + C[b] * s;
                    }
                    if (b >= 1) v = v + E.at({m, j - 1, b - 1});
                }
                E[{m, j, b}] = v;
            }
    for (int m = 0; m <= m_max; ++m)
        for (int b = 0; b < 4; ++b) F[{m, N - 1, b}] = Y * E.at({m, N - 1, b});
    for (int m = 0; m <= m_max; ++m)
        for (int j = N; j < N + 4; ++j)
            for (int b = 0; b < 4; ++b) {
                GenPoly v;
                if (m >= 1) {
                    const GenPoly& s = F.at({m - 1, j - 1, b});
                    v = v + D(s, rel) + (C[b] - Ym1) * s;
                }
                if (b >= 1) v = v + F.at({m, j - 1, b - 1});
                v = v - (band_c(t, N, j) / t.r) * (Ym1 * E.at({m, j - N, b}));
                F[{m, j, b}] = v;
            }
    std::vector<Level0Certificate> out;
    for (int m = 0; m <= m_max; ++m)
        for (int b = 0; b < 4; ++b) {
            out.push_back({m, b, 0, E.at({m, b + m, b})});
            if (b + m <= 3) out.push_back({m, b, 1, Rat(-1) * F.at({m, b + N + m, b})});
        }
    return out;
}

CheckResult level0_membership(const TargetConfig& t, int N, int m_max, int order, int guard, const DRelations& rel) {
    Generators g = generators(t, order);
    GenSeriesTable tab(g);
    auto ent = r_entries_level0(t, N, m_max, order);
    auto certs = level0_certificates(t, N, m_max, rel);
    CheckResult r;
    r.id = "level0.membership.k" + std::to_string(t.k) + ".N" + std::to_string(N);
    r.order = order;
    r.pass = true;
    // C_b in the ring against D log of the products
    auto P = pi_products(g);
    const GenPoly A = GenPoly::A(), B = GenPoly::B(), Y = GenPoly::Y(), one = GenPoly::constant(1);
    const std::array<GenPoly, 4> C = {B, B + A, Y - one - B - A, Y - one - B};
    for (int b = 0; b < 4; ++b)
        if (!compare(tab.eval(C[b]), divide(D(P[b]), P[b])).equal && r.pass) {
            r.pass = false;
            r.first_failure = "rmatrix-level0/C_b/b=" + std::to_string(b);
        }
    json rows = json::array();
    int solver_tried = 0, solver_certified = 0;
    for (const auto& c : certs) {
        Series s = c.kind == 0 ? ent.at({c.m, c.b + c.m, c.b}) : Rat(-1) * (g.Y * ent.at({c.m, c.b + N + c.m, c.b}));
        bool ok = compare(tab.eval(c.poly), s).equal;
        json row = {{"m", c.m}, {"b", c.b}, {"kind", c.kind == 0 ? "R_m^b_{b+m}" : "(Y/t^N) R_m^b_{b+N+m}"},
                    {"certificate", genpoly_json(c.poly)}, {"verified_through", order}};
        // the generic solver where the window is large enough
        int deg = std::max(0, c.poly.total_degree());
        auto monos = monomials_upto(deg);
        if (static_cast<int>(monos.size()) + guard <= order + 1) {
            ++solver_tried;
            try {
                MembershipCertificate mc = find_polynomial(s, tab, monos, deg, guard);
                row["solver"] = to_string(mc.status);
                if (mc.status == CertStatus::certified) ++solver_certified;
                else ok = false;
            } catch (const GuardFailed& e) {
                row["solver"] = e.what();
                ok = false;
            }
        }
        row["pass"] = ok;
        rows.push_back(row);
        if (!ok && r.pass) {
            r.pass = false;
            r.first_failure = "rmatrix-level0/membership/" + key_str(c.m, c.kind == 0 ? c.b + c.m : c.b + N + c.m, c.b);
        }
    }
    r.payload["guard"] = guard;
    r.payload["solver_tried"] = solver_tried;
    r.payload["solver_certified"] = solver_certified;
    r.payload["entries"] = rows;
    return r;
}

}  // namespace msplab
