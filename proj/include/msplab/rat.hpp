#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace msplab {

using Rat = mpq_class;
using Int = mpz_class;

// "num/den" with den > 0, always both parts
std::string to_string(const Rat& x);
Rat parse_rat(const std::string& s);

Rat rat_pow(const Rat& x, long e);
Int binomial(long n, long k);
Int factorial(long n);

// B_0 .. B_n, with B_1 = -1/2
std::vector<Rat> bernoulli_numbers(int n);

// n/d in canonical form
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

}  // namespace msplab
