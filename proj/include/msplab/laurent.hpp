#pragma once

#include <vector>

#include "msplab/quotient.hpp"
#include "msplab/series.hpp"

namespace msplab {

// Finite window of a Laurent series in z whose coefficients are q-series
// with values in a quotient ring: sum_{e=lead}^{top} sum_{d<=order} a(e,d) z^e q^d.
// Every coefficient in the window is exact.
struct LaurentBlock {
    int lead = 0;
    int top = -1;
    int order = 0;
    int dim = 0;
    std::vector<std::vector<Vec>> a;  // a[e - lead][d]

    LaurentBlock() = default;
    LaurentBlock(int lead, int top, int order, int dim);

    int width() const { return top - lead + 1; }
    bool in_window(int e) const { return e >= lead && e <= top; }
    Vec& at(int e, int d) { return a[e - lead][d]; }
    const Vec& at(int e, int d) const { return a[e - lead][d]; }
    Vec get(int e, int d) const;
    // lowest exponent carrying a nonzero coefficient, top+1 if none
    int min_nonzero() const;
    bool zero() const;
    // z-coefficient as a q-series of ring elements
    std::vector<Vec> zcoeff(int e) const;
};

LaurentBlock lb_add(const LaurentBlock& x, const LaurentBlock& y);
LaurentBlock lb_sub(const LaurentBlock& x, const LaurentBlock& y);
LaurentBlock lb_scale(const Rat& s, const LaurentBlock& x);
// multiply by q
LaurentBlock lb_qshift(const LaurentBlock& x);
// multiply by the ring generator
LaurentBlock lb_genmul(const QuotientRing& R, const LaurentBlock& x);
// multiply by z (the top coefficient leaves the window)
LaurentBlock lb_zmul(const LaurentBlock& x);
// z D with D = q d/dq
LaurentBlock lb_zD(const LaurentBlock& x);
// D_p = p + z D
LaurentBlock lb_Dp(const QuotientRing& R, const LaurentBlock& x);
// apply a ring map coefficientwise
template <class F>
LaurentBlock lb_map(const LaurentBlock& x, int new_dim, F&& f) {
    LaurentBlock r(x.lead, x.top, x.order, new_dim);
    for (int e = x.lead; e <= x.top; ++e)
        for (int d = 0; d <= x.order; ++d) r.at(e, d) = f(x.at(e, d));
    return r;
}

// Truncated z power series over a ring (exponents 0..n), used for inversions.
using ZPoly = std::vector<Vec>;
ZPoly zp_mul(const QuotientRing& R, const ZPoly& a, const ZPoly& b, int n);
// a(0) invertible in R
ZPoly zp_inverse(const QuotientRing& R, const ZPoly& a, int n);

}  // namespace msplab
