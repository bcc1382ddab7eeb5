#pragma once

#include <cstddef>
#include <vector>

#include "xiconst/big_complex.hpp"
#include "xiconst/precision.hpp"
#include "xiconst/zeros.hpp"

namespace xiconst {

/// Sampling plan for Cauchy-integral coefficient extraction on |z| = r.
struct ContourPlan {
    double radius;       // in (0, 1)
    std::size_t samples; // power of two, >= 8 * n_max
    long bits;           // >= effective_bits(n_max) + n_max log2(1/r)
    std::size_t n_max;

    ContourPlan(double r, std::size_t m, long b, std::size_t n);

    /// r = 0.9, M = max(1024, 8 n_max), bits from the policy plus the
    /// r^{-n} amplification and a margin.
    static ContourPlan make_default(std::size_t n_max, const PrecisionPolicy& policy = {});
};

/// F(z) = ln[(z/(1-z)) zeta(1/(1-z))], principal branch; F(0) = 0 exactly.
/// Defined for |z| <= 1, z != 1.
BigComplex f_eval(const BigComplex& z, long bits);

/// c_1..c_n_max via sampled Cauchy integral (forward DFT, kernel
/// e^{-2 pi i k m / M}, divided by M). Checks phase continuity around the
/// circle and that imaginary residues are below 2^{-bits/4}.
std::vector<BigReal> c_contour(const ContourPlan& plan);

/// Hadamard-product representation of F from the zero ordinates
/// (conjugate pairs folded); truncation error decays with the zero count.
BigComplex f_from_zeros(const BigComplex& z, const ZeroOrdinates& zeros, long bits);

/// In-place iterative radix-2 FFT, forward kernel e^{-2 pi i k m / M}.
/// Size must be a power of two.
void fft_pow2(std::vector<BigComplex>& x, long bits);

} // namespace xiconst
