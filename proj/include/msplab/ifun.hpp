#pragma once

#include <array>
#include <stdexcept>

#include "msplab/laurent.hpp"
#include "msplab/series.hpp"
#include "msplab/targets.hpp"

namespace msplab {

struct DepthTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZIFunction {
    std::array<Series, 4> I;  // I0..I3
};

// coefficient of H^j (j < 4) in prod(k h + m) / prod_i prod(a_i h + m), h = H/z
std::array<Rat, 4> zi_coefficients(const TargetConfig& t, int d);
ZIFunction z_ifunction(const TargetConfig& t, int order);

struct Generators {
    int order = 0;
    Series I0, I1, I2, I3;
    Series J1, J2, J3;
    Series I11, I22;
    Series A, B, B2, B3, Y;

    // D^m I11 / I11 and D^m I0 / I0
    Series A_m(int m) const;
    Series B_m(int m) const;
};

Generators generators(const TargetConfig& t, int order);

// I^M / z near z = 0 over Q[p]/(p^4(p^N+1)) with t^N = -1; exponents lead..top
struct MSPIFunction {
    int N = 0;
    LaurentBlock over_z;
};

MSPIFunction msp_ifunction(const TargetConfig& t, int N, int order, int top);
// default z-window for a q-order
int default_zdepth(int N, int order);

// int_0^q (L(x) - 1) dx/x with L = (1 - r x)^{1/N}
Series tau_level1(const TargetConfig& t, int N, int order);
// L = (1 - r q)^{1/N}
Series L_series(const TargetConfig& t, int N, int order);

}  // namespace msplab
