#pragma once

#include <map>
#include <string>

#include "msplab/poly.hpp"

namespace msplab {

// sum_j c_j(X) D^j with coefficients on the left and D X = X D + X(1-X).
struct PFOperator {
    std::map<int, Poly> terms;  // D-power -> coefficient in Q[X]

    static PFOperator D();
    static PFOperator mult(const Poly& f);
    int order() const { return terms.empty() ? -1 : terms.rbegin()->first; }
    Poly coeff(int j) const;
    void add_term(int j, const Poly& f);
    void trim();
    bool operator==(const PFOperator& o) const { return terms == o.terms; }
};

PFOperator operator+(const PFOperator& a, const PFOperator& b);
PFOperator operator-(const PFOperator& a, const PFOperator& b);
PFOperator operator*(const Rat& s, const PFOperator& a);
PFOperator compose(const PFOperator& a, const PFOperator& b);
// D -> D - s X
PFOperator shift_D(const PFOperator& a, const Rat& s);

// derivation on Q[X]: X(1-X) d/dX
Poly DX(const Poly& f);
// derivation on Q[Y]: Y(Y-1) d/dY  (Y = 1 - X)
Poly DY(const Poly& f);
Poly x_to_y(const Poly& f);  // f(X) -> f(1-Y)
Poly y_to_x(const Poly& f);

Poly apply_x(const PFOperator& op, const Poly& f);
Poly apply_y(const PFOperator& op, const Poly& f);

std::string to_string(const PFOperator& op);

}  // namespace msplab
