#include "msplab/zz.hpp"

#include "msplab/ifun.hpp"

namespace msplab {

namespace {

// term_d = num(w) / den(w) expanded through w^w_order
std::vector<Rat> w_expand(const Poly& num, const Poly& den, int w_order) {
    std::vector<Rat> inv(w_order + 1);
    inv[0] = 1 / den.coeff(0);
    for (int i = 1; i <= w_order; ++i) {
        Rat acc = 0;
        for (int j = 1; j <= i && j <= den.degree(); ++j) acc += den.c[j] * inv[i - j];
        inv[i] = -acc * inv[0];
    }
    std::vector<Rat> out(w_order + 1);
    for (int i = 0; i <= w_order && i <= num.degree(); ++i)
        for (int j = 0; i + j <= w_order; ++j) out[i + j] += num.c[i] * inv[j];
    return out;
}

WSeries from_terms(const std::vector<std::vector<Rat>>& terms, int x_order, int w_order) {
    WSeries F;
    F.x_order = x_order;
    F.w_order = w_order;
    F.f.assign(w_order + 1, Series(x_order));
    for (int d = 0; d <= x_order; ++d)
        for (int i = 0; i <= w_order; ++i) F.f[i][d] = terms[d][i];
    return F;
}

Poly lin(long a, long b) { return Poly(std::vector<Rat>{Rat(b), Rat(a)}); }  // a w + b

}  // namespace

WSeries f_series(const TargetConfig& t, int x_order, int w_order) {
    std::vector<std::vector<Rat>> terms;
    for (int d = 0; d <= x_order; ++d) {
        Poly num = Poly::constant(1), den = Poly::constant(1);
        for (int m = 1; m <= t.k * d; ++m) num = num * lin(t.k, m);
        for (int ai : t.a)
            for (int m = 1; m <= ai * d; ++m) den = den * lin(ai, m);
        terms.push_back(w_expand(num, den, w_order));
    }
    return from_terms(terms, x_order, w_order);
}

WSeries f_series_display6(int x_order, int w_order) {
    std::vector<std::vector<Rat>> terms;
    for (int d = 0; d <= x_order; ++d) {
        Poly num = Poly::constant(1), den = Poly::constant(rat_pow(Rat(2), d));
        for (int r = 1; r <= 6 * d; ++r) num = num * lin(6, r);
        for (int r = 1; r <= d; ++r) {
            Poly wr = lin(1, r);
            den = den * wr * wr * wr * wr * wr * lin(2, 2 * r - 1);
        }
        terms.push_back(w_expand(num, den, w_order));
    }
    return from_terms(terms, x_order, w_order);
}

WSeries apply_M(const WSeries& F) {
    if (F.w_order < 1) throw WValuationViolated("apply_M: no w-coefficients left");
    Series inv0 = inverse(F.f[0]);
    std::vector<Series> G;
    for (const auto& s : F.f) G.push_back(s * inv0);
    // (w + D) G has w^0 coefficient D G_0, which must vanish
    if (!is_zero(D(G[0]))) throw WValuationViolated("apply_M: D_w(F/F(0,x)) has a w^0 term");
    WSeries out;
    out.x_order = F.x_order;
    out.w_order = F.w_order - 1;
    for (int i = 0; i <= out.w_order; ++i) out.f.push_back(G[i] + D(G[i + 1]));
    return out;
}

std::vector<Series> ip_tower(const TargetConfig& t, int x_order, int guard) {
    WSeries F = f_series(t, x_order, 5 + guard);
    std::vector<Series> I;
    for (int p = 0; p <= 4; ++p) {
        if (p > 0) F = apply_M(F);
        I.push_back(F.f[0]);
        if (I.back()[0] != 1) throw WValuationViolated("ip_tower: I_p(0) != 1");
    }
    return I;
}

CheckResult verify_zz(const TargetConfig& t, int x_order) {
    CheckResult r;
    r.id = "zz.k" + std::to_string(t.k);
    r.order = x_order;
    r.pass = true;
    auto fail = [&](const std::string& where) {
        if (r.pass) r.first_failure = "zagier-zinger/verify_zz/" + where;
        r.pass = false;
    };
    auto I = ip_tower(t, x_order);
    Series prod = Series::one(x_order);
    for (const auto& s : I) prod = prod * s;
    bool yuk = compare(prod, Series::geometric(t.r, x_order)).equal;
    if (!yuk) fail("product");
    json sym = json::array();
    for (int p = 0; p <= 4; ++p) {
        bool ok = compare(I[p], I[4 - p]).equal;
        sym.push_back(ok);
        if (!ok) fail("symmetry/p=" + std::to_string(p));
    }
    // M^4 F is independent of w
    WSeries F = f_series(t, x_order, 6);
    for (int p = 0; p < 4; ++p) F = apply_M(F);
    bool flat = true;
    for (int i = 1; i <= F.w_order; ++i) flat = flat && is_zero(F.f[i]);
    if (!flat) fail("F4_w_dependence");
    Generators g = generators(t, x_order);
    bool c0 = compare(I[0], g.I0).equal, c1 = compare(I[1], g.I11).equal, c2 = compare(I[2], g.I22).equal;
    if (!c0 || !c1 || !c2) fail("cross_module");
    bool disp = true;
    if (t.k == 6) {
        WSeries a = f_series(t, std::min(x_order, 5), 6), b = f_series_display6(std::min(x_order, 5), 6);
        for (int i = 0; i <= 6; ++i) disp = disp && compare(a.f[i], b.f[i]).equal;
        if (!disp) fail("display_form");
        r.payload["display_form_matches"] = disp;
    }
    r.payload["product_is_Y"] = yuk;
    r.payload["symmetry"] = sym;
    r.payload["F4_constant_in_w"] = flat;
    r.payload["I0_matches"] = c0;
    r.payload["I1_matches_I11"] = c1;
    r.payload["I2_matches_I22"] = c2;
    r.payload["form"] = "generic";
    return r;
}

}  // namespace msplab
