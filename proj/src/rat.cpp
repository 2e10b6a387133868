#include "msplab/rat.hpp"

#include <stdexcept>

namespace msplab {

std::string to_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& x, long e) {
    if (e < 0) {
        if (is_zero(x)) throw std::domain_error("rat_pow: zero to negative power");
        Rat inv = 1 / x;
        return rat_pow(inv, -e);
    }
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(num, den);
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<Rat> bernoulli_numbers(int n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat acc = 0;
        for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rat(m + 1);
    }
    return b;
}

}  // namespace msplab
