#include "msplab/targets.hpp"

#include <string>

namespace msplab {

std::vector<int> ordinary_set(const std::array<int, 5>& a, int k) {
    std::vector<int> out;
    for (int m = 1; m <= k; ++m) {
        bool narrow = true;
        for (int ai : a)
            if ((m * ai) % k == 0) narrow = false;
        if (narrow || m == k) out.push_back(m);
    }
    return out;
}

long TargetConfig::band(int i) const {
    static const int idx[5] = {0, 1, 2, 1, 0};
    return c_vec[idx[i]];
}

TargetConfig target_config(int k) {
    TargetConfig t;
    t.k = k;
    switch (k) {
        case 6:
            t.a = {1, 1, 1, 1, 2};
            t.a1k = Rat(1, 2);
            t.a2k = Rat(-7, 4);
            t.c_vec = {360, 2772, 5400};
            break;
        case 8:
            t.a = {1, 1, 1, 1, 4};
            t.a1k = Rat(1, 3);
            t.a2k = Rat(-11, 6);
            t.c_vec = {1680, 15808, 30560};
            break;
        case 10:
            t.a = {1, 1, 1, 2, 5};
            t.a1k = Rat(1, 6);
            t.a2k = Rat(-17, 12);
            t.c_vec = {15120, 179520, 410720};
            break;
        default:
            throw UnknownTarget("unknown target k=" + std::to_string(k) + " (expected 6, 8 or 10)");
    }
    int sum = 0;
    Int prod = 1, prodpow = 1, kk;
    for (int ai : t.a) {
        sum += ai;
        prod *= ai;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), ai, ai);
        prodpow *= pw;
    }
    if (sum != k) throw std::logic_error("weights do not sum to k");
    mpz_ui_pow_ui(kk.get_mpz_t(), k, k);
    t.p_k = Rat(Int(k), prod);
    t.p_k.canonicalize();
    t.r = Rat(kk, prodpow);
    t.r.canonicalize();
    t.ordinary = ordinary_set(t.a, k);
    if (t.ordinary.size() != 5) throw std::logic_error("ordinary set must have 5 elements");
    return t;
}

bool is_odd_prime(int N) {
    if (N < 3 || N % 2 == 0) return false;
    for (int d = 3; d * d <= N; d += 2)
        if (N % d == 0) return false;
    return true;
}

void check_N(int N) {
    if (N < 7 || !is_odd_prime(N)) throw InvalidN("N must be an odd prime >= 7, got " + std::to_string(N));
}

}  // namespace msplab
