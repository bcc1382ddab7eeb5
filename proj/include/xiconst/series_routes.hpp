#pragma once

#include <vector>

#include "xiconst/power_series.hpp"
#include "xiconst/stieltjes.hpp"

namespace xiconst {

/// Taylor series of F(z) = ln[(z/(1-z)) zeta(1/(1-z))] through z^N built
/// from the Stieltjes constants; coefficient n is c_n (c_0 = 0, c_1 = gamma).
/// Requires gammas.k_max() >= N.
RealSeries f_series(const StieltjesTable& gammas, std::size_t order);

/// eta_0..eta_N from the logarithmic derivative of (s-1) zeta(s) about s=1.
/// Requires gammas.k_max() >= N + 1.
std::vector<BigReal> eta_series(const StieltjesTable& gammas, std::size_t order);

/// Taylor series of ln Gamma[1/(2(1-z))] through z^N; coefficient n is d_n
/// (d_0 = ln(pi)/2).
RealSeries loggamma_half_series(std::size_t order, long bits);

/// lambda_n / n for n = 1..N (index 0 of the returned vector is the checked
/// z^0 coefficient, which must vanish under the xi_Li normalization).
std::vector<BigReal> lambda_series(const StieltjesTable& gammas, std::size_t order);

} // namespace xiconst
