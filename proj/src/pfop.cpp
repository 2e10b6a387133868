#include "msplab/pfop.hpp"

namespace msplab {

PFOperator PFOperator::D() {
    PFOperator r;
    r.terms[1] = Poly::constant(1);
    return r;
}

PFOperator PFOperator::mult(const Poly& f) {
    PFOperator r;
    if (!f.zero()) r.terms[0] = f;
    return r;
}

Poly PFOperator::coeff(int j) const {
    auto it = terms.find(j);
    return it == terms.end() ? Poly{} : it->second;
}

void PFOperator::add_term(int j, const Poly& f) {
    if (f.zero()) return;
    Poly s = coeff(j) + f;
    if (s.zero()) terms.erase(j);
    else terms[j] = s;
}

void PFOperator::trim() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.zero() ? terms.erase(it) : std::next(it);
}

PFOperator operator+(const PFOperator& a, const PFOperator& b) {
    PFOperator r = a;
    for (const auto& [j, f] : b.terms) r.add_term(j, f);
    return r;
}

PFOperator operator*(const Rat& s, const PFOperator& a) {
    PFOperator r;
    for (const auto& [j, f] : a.terms) r.add_term(j, s * f);
    return r;
}

PFOperator operator-(const PFOperator& a, const PFOperator& b) { return a + Rat(-1) * b; }

Poly DX(const Poly& f) {
    static const Poly w(std::vector<Rat>{0, 1, -1});
    return w * derivative(f);
}

Poly DY(const Poly& f) {
    static const Poly w(std::vector<Rat>{0, -1, 1});
    return w * derivative(f);
}

Poly x_to_y(const Poly& f) { return substitute_affine(f, -1, 1); }
Poly y_to_x(const Poly& f) { return substitute_affine(f, -1, 1); }

// D^i o g = sum_l C(i,l) DX^l(g) D^{i-l}
PFOperator compose(const PFOperator& a, const PFOperator& b) {
    PFOperator r;
    for (const auto& [i, f] : a.terms)
        for (const auto& [j, g] : b.terms) {
            Poly der = g;
            for (int l = 0; l <= i; ++l) {
                if (der.zero()) break;
                r.add_term(i - l + j, Rat(binomial(i, l)) * (f * der));
                der = DX(der);
            }
        }
    return r;
}

PFOperator shift_D(const PFOperator& a, const Rat& s) {
    PFOperator step = PFOperator::D() - PFOperator::mult(s * Poly::x());
    PFOperator r, pw = PFOperator::mult(Poly::constant(1));
    int top = a.order();
    for (int j = 0; j <= top; ++j) {
        Poly f = a.coeff(j);
        if (!f.zero()) r = r + compose(PFOperator::mult(f), pw);
        if (j < top) pw = compose(step, pw);
    }
    return r;
}

Poly apply_x(const PFOperator& op, const Poly& f) {
    Poly r, g = f;
    int top = op.order();
    for (int j = 0; j <= top; ++j) {
        Poly c = op.coeff(j);
        if (!c.zero()) r = r + c * g;
        g = DX(g);
    }
    return r;
}

Poly apply_y(const PFOperator& op, const Poly& f) {
    Poly r, g = f;
    int top = op.order();
    for (int j = 0; j <= top; ++j) {
        Poly c = op.coeff(j);
        if (!c.zero()) r = r + x_to_y(c) * g;
        g = DY(g);
    }
    return r;
}

std::string to_string(const PFOperator& op) {
    if (op.terms.empty()) return "0";
    std::string out;
    for (auto it = op.terms.rbegin(); it != op.terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second, "X") + ")";
        if (it->first == 1) out += "*D";
        else if (it->first > 1) out += "*D^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace msplab
