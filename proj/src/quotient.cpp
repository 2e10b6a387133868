#include "msplab/quotient.hpp"

#include <stdexcept>

namespace msplab {

QuotientRing::QuotientRing(Poly modulus, std::string var, std::string name)
    : modulus_(std::move(modulus)), dim_(modulus_.degree()), var_(std::move(var)), name_(std::move(name)) {
    if (dim_ < 1 || modulus_.c.back() != 1) throw std::invalid_argument("modulus must be monic of positive degree");
    for (int i = 0; i < dim_; ++i)
        if (!msplab::is_zero(modulus_.c[i])) tail_.emplace_back(i, -modulus_.c[i]);
}

QuotientRing QuotientRing::tring(int N) {
    return QuotientRing(Poly::monomial(N) + Poly::constant(1), "t", "TRing");
}

QuotientRing QuotientRing::pring(int N) {
    return QuotientRing(Poly::monomial(N + 4) + Poly::monomial(4), "p", "PRing");
}

QuotientRing QuotientRing::hring() { return QuotientRing(Poly::monomial(4), "H", "HRing"); }

Vec QuotientRing::one() const {
    Vec v(dim_);
    v[0] = 1;
    return v;
}

Vec QuotientRing::constant(const Rat& a) const {
    Vec v(dim_);
    v[0] = a;
    return v;
}

Vec QuotientRing::gen_power(long e) const {
    Vec v(e + 1);
    v[e] = 1;
    return reduce(std::move(v));
}

Vec QuotientRing::reduce(Vec v) const {
    for (int i = static_cast<int>(v.size()) - 1; i >= dim_; --i) {
        if (msplab::is_zero(v[i])) continue;
        int base = i - dim_;
        for (const auto& [j, c] : tail_) v[base + j] += c * v[i];
        v[i] = 0;
    }
    v.resize(dim_);
    return v;
}

Vec QuotientRing::mul(const Vec& a, const Vec& b) const {
    Vec r(2 * dim_ - 1);
    Rat t;
    for (int i = 0; i < dim_; ++i) {
        if (msplab::is_zero(a[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (msplab::is_zero(b[j])) continue;
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    return reduce(std::move(r));
}

Vec QuotientRing::shift(const Vec& a, int e) const {
    Vec r(dim_ + e);
    for (int i = 0; i < dim_; ++i) r[i + e] = a[i];
    return reduce(std::move(r));
}

Vec QuotientRing::add(const Vec& a, const Vec& b) const {
    Vec r = a;
    for (int i = 0; i < dim_; ++i) r[i] += b[i];
    return r;
}

Vec QuotientRing::sub(const Vec& a, const Vec& b) const {
    Vec r = a;
    for (int i = 0; i < dim_; ++i) r[i] -= b[i];
    return r;
}

Vec QuotientRing::scale(const Rat& s, const Vec& a) const {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

void QuotientRing::add_to(Vec& acc, const Vec& a) const {
    for (int i = 0; i < dim_; ++i)
        if (!msplab::is_zero(a[i])) acc[i] += a[i];
}

void QuotientRing::add_mul_to(Vec& acc, const Vec& a, const Vec& b) const { add_to(acc, mul(a, b)); }

Vec QuotientRing::pow(const Vec& a, long e) const {
    if (e < 0) return pow(inverse(a), -e);
    Vec r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

Vec QuotientRing::inverse(const Vec& a) const {
    auto [g, s] = half_xgcd(Poly(a), modulus_);
    if (g.degree() != 0) throw std::domain_error(name_ + ": element is not invertible");
    return reduce(s);
}

bool QuotientRing::invertible(const Vec& a) const {
    auto [g, s] = half_xgcd(Poly(a), modulus_);
    return g.degree() == 0;
}

bool QuotientRing::is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!msplab::is_zero(x)) return false;
    return true;
}

std::string QuotientRing::str(const Vec& a) const { return to_string(Poly(a), var_); }

}  // namespace msplab
