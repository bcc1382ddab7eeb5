#pragma once

#include "xiconst/big_complex.hpp"
#include "xiconst/big_real.hpp"

namespace xiconst {

/// Euler-Maclaurin truncation parameters: sum k^{-s} for k < shift_m, then
/// order_v Bernoulli correction terms at the shift point.
struct EmParams {
    long shift_m;
    long order_v;
};

/// Parameters chosen so the analytic remainder is below 2^{-bits-10}.
EmParams zeta_params(const BigComplex& s, long bits);

/// Riemann zeta by Euler-Maclaurin. Supported for s != 1 with Re s > -8
/// (the small negative strip is needed by the functional-equation check;
/// everything else stays in Re s > 1/2). Absolute error <= 2^{-bits+8}.
BigComplex zeta(const BigComplex& s, long bits);
BigComplex zeta(const BigComplex& s, long bits, const EmParams& params);
BigReal zeta_real(const BigReal& s, long bits);

/// The documented error bound for zeta at this precision.
BigReal zeta_error_bound(long bits);

/// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^{-s} for s > 1, a > 0.
BigReal hurwitz_zeta(const BigReal& s, const BigReal& a, long bits);

/// psi^{(j)}(1/2) = (-1)^{j+1} j! (2^{j+1} - 1) zeta(j+1), j >= 1.
BigReal polygamma_half(unsigned j, long bits);

/// psi(1/2) = -gamma - 2 ln 2.
BigReal digamma_half(long bits);

} // namespace xiconst
