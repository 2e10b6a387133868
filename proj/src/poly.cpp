#include "msplab/poly.hpp"

#include <stdexcept>

namespace msplab {

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }

Poly Poly::monomial(int e, const Rat& a) {
    std::vector<Rat> v(e + 1);
    v[e] = a;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<Rat> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& a) {
    if (is_zero(s)) return {};
    Poly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

Poly derivative(const Poly& a) {
    if (a.degree() < 1) return {};
    std::vector<Rat> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly substitute_affine(const Poly& p, const Rat& a, const Rat& b) {
    Poly lin(std::vector<Rat>{b, a});
    Poly r;
    for (int i = p.degree(); i >= 0; --i) r = r * lin + Poly::constant(p.c[i]);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly{}, a};
    std::vector<Rat> q(dq + 1);
    const Rat& lead = b.c.back();
    for (int i = dq; i >= 0; --i) {
        Rat f = rem[i + db] / lead;
        q[i] = f;
        if (is_zero(f)) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] -= f * b.c[j];
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

std::pair<Poly, Poly> half_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1;
    while (!r1.zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.zero()) return {r0, s0};
    Rat inv = 1 / r0.c.back();
    return {inv * r0, inv * s0};
}

std::string to_string(const Poly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (is_zero(p.c[i])) continue;
        std::string coef = p.c[i].get_str();
        if (!out.empty()) out += (sgn(p.c[i]) > 0 ? " + " : " - ");
        else if (sgn(p.c[i]) < 0) out += "-";
        if (sgn(p.c[i]) < 0) coef = coef.substr(1);
        if (i == 0) out += coef;
        else {
            if (coef != "1") out += coef + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace msplab
