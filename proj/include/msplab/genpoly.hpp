#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "msplab/ifun.hpp"
#include "msplab/series.hpp"

namespace msplab {

// exponents of (A, B, B2, B3, Y)
using Mono = std::array<int, 5>;

// graded lexicographic: total degree first, then larger exponents of
// earlier variables first
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const;
};

struct GenPoly {
    std::map<Mono, Rat, MonoLess> terms;

    static GenPoly constant(const Rat& c);
    static GenPoly var(int i);  // 0:A 1:B 2:B2 3:B3 4:Y
    static GenPoly A() { return var(0); }
    static GenPoly B() { return var(1); }
    static GenPoly B2() { return var(2); }
    static GenPoly B3() { return var(3); }
    static GenPoly Y() { return var(4); }

    bool zero() const { return terms.empty(); }
    int total_degree() const;
    void add_term(const Mono& m, const Rat& c);
    bool operator==(const GenPoly& o) const { return terms == o.terms; }
};

GenPoly operator+(const GenPoly& a, const GenPoly& b);
GenPoly operator-(const GenPoly& a, const GenPoly& b);
GenPoly operator*(const GenPoly& a, const GenPoly& b);
GenPoly operator*(const Rat& s, const GenPoly& a);

// all monomials of total degree <= d in the fixed order
std::vector<Mono> monomials_upto(int d);

// values of D on the generators; DB, DB2 and DY are chain-rule identities,
// DA and DB3 need the supplied expressions for A2 and B4
struct DRelations {
    GenPoly A2, B4;
};
GenPoly D(const GenPoly& p, const DRelations& rel);

// expansion as a q-series using the generator series
class GenSeriesTable {
public:
    GenSeriesTable(const Generators& g);
    const Series& power(int var, int e);
    Series monomial(const Mono& m);
    Series eval(const GenPoly& p);
    int order() const { return order_; }

private:
    int order_;
    std::array<std::vector<Series>, 5> pw_;
};

std::string to_string(const GenPoly& p);

}  // namespace msplab
