#include "msplab/laurent.hpp"

#include <stdexcept>

namespace msplab {

LaurentBlock::LaurentBlock(int lead_, int top_, int order_, int dim_)
    : lead(lead_), top(top_), order(order_), dim(dim_) {
    a.assign(std::max(0, top - lead + 1), std::vector<Vec>(order + 1, Vec(dim)));
}

Vec LaurentBlock::get(int e, int d) const {
    if (!in_window(e) || d < 0 || d > order) return Vec(dim);
    return at(e, d);
}

int LaurentBlock::min_nonzero() const {
    for (int e = lead; e <= top; ++e)
        for (int d = 0; d <= order; ++d)
            if (!QuotientRing::is_zero(at(e, d))) return e;
    return top + 1;
}

bool LaurentBlock::zero() const { return min_nonzero() > top; }

std::vector<Vec> LaurentBlock::zcoeff(int e) const {
    if (!in_window(e)) return std::vector<Vec>(order + 1, Vec(dim));
    return a[e - lead];
}

static void check_compatible(const LaurentBlock& x, const LaurentBlock& y) {
    if (x.lead != y.lead || x.top != y.top || x.order != y.order || x.dim != y.dim)
        throw std::invalid_argument("LaurentBlock windows differ");
}

LaurentBlock lb_add(const LaurentBlock& x, const LaurentBlock& y) {
    check_compatible(x, y);
    LaurentBlock r = x;
    for (size_t i = 0; i < r.a.size(); ++i)
        for (int d = 0; d <= r.order; ++d)
            for (int k = 0; k < r.dim; ++k) r.a[i][d][k] += y.a[i][d][k];
    return r;
}

LaurentBlock lb_sub(const LaurentBlock& x, const LaurentBlock& y) {
    check_compatible(x, y);
    LaurentBlock r = x;
    for (size_t i = 0; i < r.a.size(); ++i)
        for (int d = 0; d <= r.order; ++d)
            for (int k = 0; k < r.dim; ++k) r.a[i][d][k] -= y.a[i][d][k];
    return r;
}

LaurentBlock lb_scale(const Rat& s, const LaurentBlock& x) {
    LaurentBlock r = x;
    for (auto& row : r.a)
        for (auto& v : row)
            for (auto& c : v) c *= s;
    return r;
}

LaurentBlock lb_qshift(const LaurentBlock& x) {
    LaurentBlock r(x.lead, x.top, x.order, x.dim);
    for (size_t i = 0; i < r.a.size(); ++i)
        for (int d = 1; d <= r.order; ++d) r.a[i][d] = x.a[i][d - 1];
    return r;
}

LaurentBlock lb_genmul(const QuotientRing& R, const LaurentBlock& x) {
    LaurentBlock r(x.lead, x.top, x.order, x.dim);
    for (size_t i = 0; i < r.a.size(); ++i)
        for (int d = 0; d <= r.order; ++d)
            if (!QuotientRing::is_zero(x.a[i][d])) r.a[i][d] = R.shift(x.a[i][d], 1);
    return r;
}

LaurentBlock lb_zD(const LaurentBlock& x) {
    LaurentBlock r(x.lead, x.top, x.order, x.dim);
    for (int e = x.lead; e < x.top; ++e)
        for (int d = 1; d <= x.order; ++d) {
            const Vec& v = x.at(e, d);
            Vec& o = r.at(e + 1, d);
            for (int k = 0; k < x.dim; ++k)
                if (!is_zero(v[k])) o[k] = v[k] * d;
        }
    return r;
}

LaurentBlock lb_zmul(const LaurentBlock& x) {
    LaurentBlock r(x.lead, x.top, x.order, x.dim);
    for (int e = x.lead; e < x.top; ++e) r.a[e + 1 - x.lead] = x.a[e - x.lead];
    return r;
}

LaurentBlock lb_Dp(const QuotientRing& R, const LaurentBlock& x) { return lb_add(lb_genmul(R, x), lb_zD(x)); }

ZPoly zp_mul(const QuotientRing& R, const ZPoly& a, const ZPoly& b, int n) {
    ZPoly r(n + 1, R.zero());
    for (int i = 0; i < static_cast<int>(a.size()) && i <= n; ++i) {
        if (QuotientRing::is_zero(a[i])) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= n; ++j) {
            if (QuotientRing::is_zero(b[j])) continue;
            R.add_to(r[i + j], R.mul(a[i], b[j]));
        }
    }
    return r;
}

ZPoly zp_inverse(const QuotientRing& R, const ZPoly& a, int n) {
    Vec c0inv = R.inverse(a[0]);
    ZPoly b(n + 1, R.zero());
    b[0] = c0inv;
    for (int m = 1; m <= n; ++m) {
        Vec acc = R.zero();
        for (int i = 1; i <= m && i < static_cast<int>(a.size()); ++i) {
            if (QuotientRing::is_zero(a[i]) || QuotientRing::is_zero(b[m - i])) continue;
            R.add_to(acc, R.mul(a[i], b[m - i]));
        }
        b[m] = R.scale(-1, R.mul(c0inv, acc));
    }
    return b;
}

}  // namespace msplab
