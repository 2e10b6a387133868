#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "msplab/rat.hpp"

namespace msplab {

struct UnknownTarget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidN : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TargetConfig {
    int k = 0;
    std::array<int, 5> a{};
    Rat p_k, r, a1k, a2k;
    std::vector<int> ordinary;
    std::array<long, 3> c_vec{};

    // band constant for quantum multiplication by p at row i = 0..4
    // (c1, c2, c3, c2, c1); the last entry also carries t^N = -1
    long band(int i) const;
};

TargetConfig target_config(int k);
std::vector<int> ordinary_set(const std::array<int, 5>& a, int k);
// N odd prime >= 7
void check_N(int N);
bool is_odd_prime(int N);

}  // namespace msplab
