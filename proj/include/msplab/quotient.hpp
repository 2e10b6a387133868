#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msplab/poly.hpp"
#include "msplab/rat.hpp"

namespace msplab {

using Vec = std::vector<Rat>;

// Q[x]/(m(x)) for a monic modulus m. Elements are coefficient vectors of
// length dim() in the monomial basis 1, x, ..., x^{dim-1}.
class QuotientRing {
public:
    QuotientRing(Poly modulus, std::string var, std::string name);

    static QuotientRing tring(int N);   // Q[t]/(t^N + 1)
    static QuotientRing pring(int N);   // Q[p]/(p^4 (p^N + 1))
    static QuotientRing hring();        // Q[H]/(H^4)

    int dim() const { return dim_; }
    const Poly& modulus() const { return modulus_; }
    const std::string& var() const { return var_; }
    const std::string& name() const { return name_; }

    Vec zero() const { return Vec(dim_); }
    Vec one() const;
    Vec gen_power(long e) const;  // x^e reduced, e >= 0
    Vec constant(const Rat& a) const;

    // reduce an arbitrary-length coefficient vector
    Vec reduce(Vec v) const;
    Vec reduce(const Poly& p) const { return reduce(p.c); }
    Vec mul(const Vec& a, const Vec& b) const;
    // multiply by x^e (e >= 0)
    Vec shift(const Vec& a, int e) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scale(const Rat& s, const Vec& a) const;
    void add_to(Vec& acc, const Vec& a) const;
    void add_mul_to(Vec& acc, const Vec& a, const Vec& b) const;
    Vec pow(const Vec& a, long e) const;
    // throws std::domain_error if a is a zero divisor
    Vec inverse(const Vec& a) const;
    bool invertible(const Vec& a) const;
    static bool is_zero(const Vec& a);

    std::string str(const Vec& a) const;

private:
    Poly modulus_;
    int dim_;
    std::string var_, name_;
    // x^dim = sum tail_[i].second * x^{tail_[i].first}
    std::vector<std::pair<int, Rat>> tail_;
};

}  // namespace msplab
