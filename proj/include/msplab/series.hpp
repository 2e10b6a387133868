#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "msplab/rat.hpp"

namespace msplab {

struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonZeroInnerConstant : std::domain_error {
    using std::domain_error::domain_error;
};

// Truncated power series in q over Q. Coefficients 0..order are exact.
// Binary operations contract to the smaller order; `contracted` records it.
struct Series {
    std::vector<Rat> c;
    bool contracted = false;

    Series() = default;
    explicit Series(int order) : c(order + 1) {}
    Series(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Rat& operator[](int i) const { return c[i]; }
    Rat& operator[](int i) { return c[i]; }
    Rat at(int i) const { return i >= 0 && i <= order() ? c[i] : Rat(0); }

    static Series constant(const Rat& a, int order);
    static Series one(int order) { return constant(1, order); }
    static Series q(int order);
    // 1/(1 - r q)
    static Series geometric(const Rat& r, int order);
};

Series truncate(const Series& a, int order);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rat& s, const Series& a);
Series& operator+=(Series& a, const Series& b);
Series& operator-=(Series& a, const Series& b);

Series inverse(const Series& a);
Series divide(const Series& a, const Series& b);
// D = q d/dq
Series D(const Series& a);
Series Dn(const Series& a, int n);
// q^k * a, keeping the order of a
Series shift_q(const Series& a, int k);
// a(b(q)) with b(0) = 0
Series compose(const Series& a, const Series& b);
// compositional inverse of f = q + O(q^2)
Series revert(const Series& f);
// exp(a) with a(0) = 0
Series exp_series(const Series& a);
// integral_0^q a(x) dx/x, requires a(0) = 0
Series integrate_dlog(const Series& a);
Series pow(const Series& a, int e);
// (1 + u)^s for rational s, u(0) = 0
Series binomial_series(const Series& u, const Rat& s);

struct SeriesDiff {
    bool equal;
    int first_mismatch;  // -1 when equal
    int order;           // common order compared
};
SeriesDiff compare(const Series& a, const Series& b);
bool is_zero(const Series& a);

std::string to_string(const Series& a, int max_terms = 8);

}  // namespace msplab
