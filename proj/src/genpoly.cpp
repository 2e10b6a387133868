#include "msplab/genpoly.hpp"

#include <numeric>

namespace msplab {

bool MonoLess::operator()(const Mono& x, const Mono& y) const {
    int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx < dy;
    return x > y;
}

GenPoly GenPoly::constant(const Rat& c) {
    GenPoly p;
    p.add_term(Mono{0, 0, 0, 0, 0}, c);
    return p;
}

GenPoly GenPoly::var(int i) {
    Mono m{0, 0, 0, 0, 0};
    m[i] = 1;
    GenPoly p;
    p.add_term(m, 1);
    return p;
}

int GenPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

void GenPoly::add_term(const Mono& m, const Rat& c) {
    if (is_zero(c)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
}

GenPoly operator+(const GenPoly& a, const GenPoly& b) {
    GenPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

GenPoly operator*(const Rat& s, const GenPoly& a) {
    GenPoly r;
    if (is_zero(s)) return r;
    for (const auto& [m, c] : a.terms) r.terms.emplace(m, s * c);
    return r;
}

GenPoly operator-(const GenPoly& a, const GenPoly& b) { return a + Rat(-1) * b; }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
    GenPoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Mono m;
            for (int i = 0; i < 5; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

std::vector<Mono> monomials_upto(int d) {
    std::vector<Mono> out;
    for (int deg = 0; deg <= d; ++deg) {
        std::vector<Mono> layer;
        Mono m{};
        // compositions of deg into 5 parts
        for (m[0] = deg; m[0] >= 0; --m[0])
            for (m[1] = deg - m[0]; m[1] >= 0; --m[1])
                for (m[2] = deg - m[0] - m[1]; m[2] >= 0; --m[2])
                    for (m[3] = deg - m[0] - m[1] - m[2]; m[3] >= 0; --m[3]) {
                        m[4] = deg - m[0] - m[1] - m[2] - m[3];
                        layer.push_back(m);
                    }
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

GenPoly D(const GenPoly& p, const DRelations& rel) {
    const GenPoly A = GenPoly::A(), B = GenPoly::B(), B2 = GenPoly::B2(), B3 = GenPoly::B3(), Y = GenPoly::Y();
    const std::array<GenPoly, 5> dv = {rel.A2 - A * A, B2 - B * B, B3 - B * B2, rel.B4 - B * B3, Y * Y - Y};
    GenPoly r;
    for (const auto& [m, c] : p.terms)
        for (int i = 0; i < 5; ++i) {
            if (m[i] == 0) continue;
            Mono rest = m;
            rest[i] -= 1;
            GenPoly base;
            base.add_term(rest, c * m[i]);
            r = r + base * dv[i];
        }
    return r;
}

GenSeriesTable::GenSeriesTable(const Generators& g) : order_(g.order) {
    const Series* v[5] = {&g.A, &g.B, &g.B2, &g.B3, &g.Y};
    for (int i = 0; i < 5; ++i) {
        pw_[i].push_back(Series::one(order_));
        pw_[i].push_back(*v[i]);
    }
}

const Series& GenSeriesTable::power(int var, int e) {
    auto& p = pw_[var];
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * p[1]);
    return p[e];
}

Series GenSeriesTable::monomial(const Mono& m) {
    Series s = Series::one(order_);
    for (int i = 0; i < 5; ++i)
        if (m[i]) s = s * power(i, m[i]);
    return s;
}

Series GenSeriesTable::eval(const GenPoly& p) {
    Series s(order_);
    for (const auto& [m, c] : p.terms) s += c * monomial(m);
    return s;
}

std::string to_string(const GenPoly& p) {
    static const char* names[5] = {"A", "B", "B2", "B3", "Y"};
    if (p.zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms) {
        std::string mono;
        for (int i = 0; i < 5; ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        Rat a = abs(c);
        std::string sign = sgn(c) < 0 ? "-" : "+";
        if (out.empty()) out = sgn(c) < 0 ? "-" : "";
        else out += " " + sign + " ";
        if (mono.empty()) out += a.get_str();
        else if (a == 1) out += mono;
        else out += a.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace msplab
