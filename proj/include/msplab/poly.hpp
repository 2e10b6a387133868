#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msplab/rat.hpp"

namespace msplab {

// Dense univariate polynomial over Q, c[i] is the coefficient of x^i.
// Trailing zeros are stripped, the zero polynomial has no coefficients.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& a);
    static Poly monomial(int e, const Rat& a = 1);
    static Poly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    Rat coeff(int i) const;
    Rat eval(const Rat& x) const;
    void trim();

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);
Poly derivative(const Poly& a);
// p(x) -> p(a*x + b)
Poly substitute_affine(const Poly& p, const Rat& a, const Rat& b);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// returns (g, s) with s*a = g mod b, g = gcd made monic
std::pair<Poly, Poly> half_xgcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& p, const std::string& var);

}  // namespace msplab
