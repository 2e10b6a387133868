#pragma once

#include <stdexcept>
#include <vector>

#include "msplab/report.hpp"
#include "msplab/series.hpp"
#include "msplab/targets.hpp"

namespace msplab {

struct WValuationViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F(w, x) = sum_i w^i f[i](x), i = 0..w_order, each f[i] exact through x^x_order
struct WSeries {
    int x_order = 0, w_order = 0;
    std::vector<Series> f;
};

// sum_d x^d prod_{m<=kd}(k w + m) / prod_i prod_{m<=a_i d}(a_i w + m)
WSeries f_series(const TargetConfig& t, int x_order, int w_order);
// k = 6 only: sum_d x^d prod_{r<=6d}(6w + r) / (2^d prod_{r<=d} (w + r)^5 (2w + 2r - 1))
WSeries f_series_display6(int x_order, int w_order);
// M F = w^{-1} (w + x d/dx)(F / F(0, x)); w_order drops by one
WSeries apply_M(const WSeries& F);
// I_p = (M^p F)(0, x), p = 0..4
std::vector<Series> ip_tower(const TargetConfig& t, int x_order, int guard = 4);
// prod I_p = Y, I_p = I_{4-p}, I_0 / I_1 / I_2 against I0 / I11 / I22
CheckResult verify_zz(const TargetConfig& t, int x_order);

}  // namespace msplab
