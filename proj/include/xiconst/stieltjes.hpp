#pragma once

#include <cstddef>
#include <vector>

#include "xiconst/big_real.hpp"

namespace xiconst {

/// Stieltjes constants gamma_0..gamma_K at a recorded precision.
///
/// Computed by Euler-Maclaurin acceleration of sum_{m<=N} ln^k m / m -
/// ln^{k+1} N / (k+1), all orders k at once as a power series about s = 1.
/// Construction runs the summation at N and 2N and fails if any constant
/// moves by more than 2^{-bits+16} (relative to max(1, |gamma_k|)).
class StieltjesTable {
  public:
    StieltjesTable(std::size_t k_max, long bits);

    std::size_t k_max() const { return values_.size() - 1; }
    long bits() const { return bits_; }
    const BigReal& gamma(std::size_t k) const { return values_.at(k); }

    static constexpr std::size_t max_supported_k = 128;

  private:
    long bits_;
    std::vector<BigReal> values_;
};

struct LaurentEval {
    BigReal value;
    BigReal tail_bound;
};

/// 1/(s-1) + sum_{n<=K} (-1)^n gamma_n (s-1)^n / n!, with a heuristic bound
/// on the dropped tail. Requires 0 < |s-1| < 1 and a tail bound below the
/// tolerance (default 2^{-bits/4}).
LaurentEval zeta_laurent_eval(const BigReal& s, const StieltjesTable& table);
LaurentEval zeta_laurent_eval(const BigReal& s, const StieltjesTable& table, const BigReal& tolerance);

} // namespace xiconst
