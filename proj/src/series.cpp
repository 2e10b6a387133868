#include "msplab/series.hpp"

#include <algorithm>

namespace msplab {

Series Series::constant(const Rat& a, int order) {
    Series s(order);
    s.c[0] = a;
    return s;
}

Series Series::q(int order) {
    Series s(order);
    if (order >= 1) s.c[1] = 1;
    return s;
}

Series Series::geometric(const Rat& r, int order) {
    Series s(order);
    Rat p = 1;
    for (int i = 0; i <= order; ++i, p *= r) s.c[i] = p;
    return s;
}

Series truncate(const Series& a, int order) {
    Series r;
    r.c.assign(a.c.begin(), a.c.begin() + std::min(order, a.order()) + 1);
    r.contracted = a.contracted || order < a.order();
    return r;
}

static Series binop_shell(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    r.contracted = a.contracted || b.contracted || a.order() != b.order();
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series r = binop_shell(a, b);
    for (int i = 0; i <= r.order(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r = binop_shell(a, b);
    for (int i = 0; i <= r.order(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Series operator-(const Series& a) {
    Series r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Series& operator+=(Series& a, const Series& b) { return a = a + b; }
Series& operator-=(Series& a, const Series& b) { return a = a - b; }

Series operator*(const Series& a, const Series& b) {
    Series r = binop_shell(a, b);
    int n = r.order();
    Rat t;
    for (int i = 0; i <= n; ++i) {
        if (is_zero(a.c[i])) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (is_zero(b.c[j])) continue;
            mpq_mul(t.get_mpq_t(), a.c[i].get_mpq_t(), b.c[j].get_mpq_t());
            r.c[i + j] += t;
        }
    }
    return r;
}

Series operator*(const Rat& s, const Series& a) {
    Series r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

Series inverse(const Series& a) {
    if (a.c.empty() || is_zero(a.c[0])) throw NonUnitConstantTerm("series inverse: zero constant term");
    int n = a.order();
    Series b(n);
    b.contracted = a.contracted;
    Rat inv0 = 1 / a.c[0];
    b.c[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        Rat acc = 0;
        for (int j = 1; j <= i; ++j)
            if (!is_zero(a.c[j])) acc += a.c[j] * b.c[i - j];
        b.c[i] = -acc * inv0;
    }
    return b;
}

Series divide(const Series& a, const Series& b) { return a * inverse(b); }

Series D(const Series& a) {
    Series r = a;
    for (int i = 0; i <= r.order(); ++i) r.c[i] *= i;
    return r;
}

Series Dn(const Series& a, int n) {
    Series r = a;
    for (int k = 0; k < n; ++k) r = D(r);
    return r;
}

Series shift_q(const Series& a, int k) {
    Series r(a.order());
    r.contracted = a.contracted;
    for (int i = 0; i + k <= a.order(); ++i)
        if (i + k >= 0) r.c[i + k] = a.c[i];
    return r;
}

Series compose(const Series& a, const Series& b) {
    if (!is_zero(b.c[0])) throw NonZeroInnerConstant("compose: inner series has nonzero constant term");
    int n = std::min(a.order(), b.order());
    Series res(n), pw = Series::one(n);
    Series bt = truncate(b, n);
    for (int i = 0; i <= n; ++i) {
        if (!is_zero(a.c[i])) res += a.c[i] * pw;
        if (i < n) pw = pw * bt;
    }
    res.contracted = a.contracted || b.contracted || a.order() != b.order();
    return res;
}

Series revert(const Series& f) {
    if (!is_zero(f.c[0]) || f.order() < 1 || f.c[1] != 1)
        throw NonZeroInnerConstant("revert: expected q + O(q^2)");
    int n = f.order();
    Series qs = Series::q(n);
    Series g = qs;
    // g <- q - (f(g) - g); each pass fixes one more coefficient
    for (int it = 0; it <= n; ++it) g = qs - (compose(f, g) - g);
    return g;
}

Series exp_series(const Series& a) {
    if (!is_zero(a.c[0])) throw NonZeroInnerConstant("exp: nonzero constant term");
    int n = a.order();
    Series e(n);
    e.contracted = a.contracted;
    e.c[0] = 1;
    Series da = D(a);
    for (int i = 1; i <= n; ++i) {
        Rat acc = 0;
        for (int j = 1; j <= i; ++j)
            if (!is_zero(da.c[j])) acc += da.c[j] * e.c[i - j];
        e.c[i] = acc / i;
    }
    return e;
}

Series integrate_dlog(const Series& a) {
    if (!is_zero(a.c[0])) throw std::domain_error("integrate_dlog: nonzero constant term");
    Series r = a;
    for (int i = 1; i <= r.order(); ++i) r.c[i] /= i;
    return r;
}

Series pow(const Series& a, int e) {
    if (e < 0) return pow(inverse(a), -e);
    Series r = Series::one(a.order()), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Series binomial_series(const Series& u, const Rat& s) {
    if (!is_zero(u.c[0])) throw NonZeroInnerConstant("binomial_series: nonzero constant term");
    // f = (1+u)^s solves (1+u) Df = s f Du
    int n = u.order();
    Series f(n);
    f.c[0] = 1;
    Series du = D(u);
    for (int i = 1; i <= n; ++i) {
        // i f_i + sum_{j>=1} u_j (i-j) f_{i-j} = s sum_{j>=1} du_j f_{i-j}
        Rat acc = 0;
        for (int j = 1; j <= i; ++j) {
            if (is_zero(u.c[j])) continue;
            acc += (s * du.c[j] - u.c[j] * (i - j)) * f.c[i - j];
        }
        f.c[i] = acc / i;
    }
    return f;
}

SeriesDiff compare(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.c[i] != b.c[i]) return {false, i, n};
    return {true, -1, n};
}

bool is_zero(const Series& a) {
    for (const auto& x : a.c)
        if (!is_zero(x)) return false;
    return true;
}

std::string to_string(const Series& a, int max_terms) {
    std::string out;
    int shown = 0;
    for (int i = 0; i <= a.order() && shown < max_terms; ++i) {
        if (is_zero(a.c[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + a.c[i].get_str() + ")";
        if (i == 1) out += "q";
        else if (i > 1) out += "q^" + std::to_string(i);
        ++shown;
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(a.order() + 1) + ")";
}

}  // namespace msplab
