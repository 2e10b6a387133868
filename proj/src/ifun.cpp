#include "msplab/ifun.hpp"

#include <algorithm>
#include <string>

namespace msplab {

std::array<Rat, 4> zi_coefficients(const TargetConfig& t, int d) {
    // multiply by (c h + m) or divide by it inside Q[h]/(h^4)
    std::array<Rat, 4> p{1, 0, 0, 0};
    for (int m = 1; m <= t.k * d; ++m) {
        for (int j = 3; j >= 0; --j) p[j] = p[j] * m + (j > 0 ? p[j - 1] * t.k : Rat(0));
    }
    for (int ai : t.a)
        for (int m = 1; m <= ai * d; ++m) {
            for (int j = 0; j < 4; ++j) p[j] = (p[j] - (j > 0 ? p[j - 1] * ai : Rat(0))) / m;
        }
    return p;
}

ZIFunction z_ifunction(const TargetConfig& t, int order) {
    ZIFunction z;
    for (auto& s : z.I) s = Series(order);
    for (int d = 0; d <= order; ++d) {
        auto c = zi_coefficients(t, d);
        for (int j = 0; j < 4; ++j) z.I[j][d] = c[j];
    }
    return z;
}

Series Generators::A_m(int m) const { return divide(Dn(I11, m), I11); }
Series Generators::B_m(int m) const { return divide(Dn(I0, m), I0); }

Generators generators(const TargetConfig& t, int order) {
    Generators g;
    g.order = order;
    ZIFunction z = z_ifunction(t, order);
    g.I0 = z.I[0];
    g.I1 = z.I[1];
    g.I2 = z.I[2];
    g.I3 = z.I[3];
    Series inv0 = inverse(g.I0);
    g.J1 = g.I1 * inv0;
    g.J2 = g.I2 * inv0;
    g.J3 = g.I3 * inv0;
    Series one = Series::one(order);
    g.I11 = one + D(g.J1);
    g.I22 = one + D(divide(g.J1 + D(g.J2), g.I11));
    g.A = divide(D(g.I11), g.I11);
    g.B = inv0 * D(g.I0);
    g.B2 = inv0 * Dn(g.I0, 2);
    g.B3 = inv0 * Dn(g.I0, 3);
    g.Y = Series::geometric(t.r, order);
    return g;
}

int default_zdepth(int N, int order) { return N + 3 + std::max(3, order); }

namespace {

// multiply a z-polynomial over R by (c x + m z), x the ring generator
void mul_linear(const QuotientRing& R, ZPoly& f, long c, long m, int n) {
    ZPoly g(n + 1, R.zero());
    for (int i = 0; i <= n; ++i) {
        if (i < static_cast<int>(f.size()) && !QuotientRing::is_zero(f[i])) g[i] = R.scale(Rat(c), R.shift(f[i], 1));
        if (i >= 1 && i - 1 < static_cast<int>(f.size()) && !QuotientRing::is_zero(f[i - 1]))
            R.add_to(g[i], R.scale(Rat(m), f[i - 1]));
    }
    f = std::move(g);
}

}  // namespace

MSPIFunction msp_ifunction(const TargetConfig& t, int N, int order, int top) {
    check_N(N);
    if (top < 0) throw DepthTooSmall("z-window top exponent must be >= 0, got " + std::to_string(top));
    QuotientRing H = QuotientRing::hring();
    QuotientRing T = QuotientRing::tring(N);
    QuotientRing P = QuotientRing::pring(N);
    int lead = -std::max(3, order);
    MSPIFunction out;
    out.N = N;
    out.over_z = LaurentBlock(lead, top, order, N + 4);

    for (int d = 0; d <= order; ++d) {
        // hypersurface part, indexed by e + 3
        int zn = top + 3;
        ZPoly a(zn + 1, H.zero());
        auto cj = zi_coefficients(t, d);
        for (int j = 0; j < 4; ++j) a[3 - j][j] = cj[j];
        ZPoly U(1, H.one());
        for (int m = 1; m <= d; ++m) {
            ZPoly u(std::min(N, zn) + 1, H.zero());
            u[0] = H.one();
            for (int l = std::max(0, N - 3); l <= N && l <= zn; ++l) {
                Vec v = H.zero();
                v[N - l] = Rat(binomial(N, l)) * rat_pow(Rat(m), l);
                H.add_to(u[l], v);
            }
            U = zp_mul(H, U, u, zn);
        }
        ZPoly zpart = zp_mul(H, a, zp_inverse(H, U, zn), zn);

        // point part: exponents 0..tn before the shift by -d
        int tn = top + d;
        ZPoly num(1, T.one());
        for (int m = 1; m <= t.k * d; ++m) mul_linear(T, num, t.k, m, tn);
        ZPoly den(1, T.one());
        for (int ai : t.a)
            for (int m = 1; m <= ai * d; ++m) mul_linear(T, den, ai, m, tn);
        for (int m = 1; m <= d; ++m) {
            ZPoly g(std::min(N - 1, tn) + 1, T.zero());
            for (int l = 1; l <= N && l - 1 <= tn; ++l) {
                Vec v = T.zero();
                v[N - l] = Rat(binomial(N, l)) * rat_pow(Rat(m), l);
                g[l - 1] = v;
            }
            den = zp_mul(T, den, g, tn);
        }
        num.resize(tn + 1, T.zero());
        ZPoly tpart = zp_mul(T, num, zp_inverse(T, den, tn), tn);

        // Chinese remainder: h (1 + p^N) - s p^N
        for (int e = lead; e <= top; ++e) {
            Vec big(2 * N + 4);
            int zi = e + 3;
            if (zi >= 0 && zi <= zn)
                for (int i = 0; i < 4; ++i) {
                    const Rat& h = zpart[zi][i];
                    if (is_zero(h)) continue;
                    big[i] += h;
                    big[i + N] += h;
                }
            int ti = e + d;
            if (ti >= 0 && ti <= tn)
                for (int i = 0; i < N; ++i) big[i + N] -= tpart[ti][i];
            out.over_z.at(e, d) = P.reduce(std::move(big));
        }
    }
    return out;
}

Series L_series(const TargetConfig& t, int N, int order) {
    return binomial_series(Rat(-1) * (t.r * Series::q(order)), Rat(1, N));
}

Series tau_level1(const TargetConfig& t, int N, int order) {
    Series L = L_series(t, N, order);
    return integrate_dlog(L - Series::one(order));
}

}  // namespace msplab
