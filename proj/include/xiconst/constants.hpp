#pragma once

#include <span>
#include <string>
#include <vector>

#include "xiconst/big_real.hpp"
#include "xiconst/mangoldt.hpp"
#include "xiconst/stieltjes.hpp"
#include "xiconst/zeros.hpp"

namespace xiconst {

/// Closed-form Stieltjes routes are capped here; the series route is the
/// production path for larger indices.
constexpr unsigned closed_form_cap = 32;

/// S1(n) = sum_{m=2}^n (-1)^m C(n,m) (1 - 2^{-m}) zeta(m), n >= 2.
BigReal s1(unsigned n, long bits);

/// S1(2..n_max) sharing one zeta table.
std::vector<BigReal> s1_range(unsigned n_max, long bits);

/// S2(n) = -sum_{m=1}^n C(n,m) eta_{m-1}; etas must cover eta_0..eta_{n-1}.
BigReal s2(unsigned n, std::span<const BigReal> etas);

/// eta_{k-1} from the Stieltjes multinomial sum, k in [2, cap].
BigReal eta_from_stieltjes(unsigned k, const StieltjesTable& gammas, unsigned cap = closed_form_cap);

/// Partial limit expression for eta_k (slowly convergent; loose sanity
/// oracle only).
BigReal eta_limit_oracle(unsigned k, const MangoldtTable& sieve, std::uint32_t N, long bits);

/// lambda_n = 1 + S1(n) + S2(n) - n(gamma + ln pi + 2 ln 2)/2.
BigReal lambda_from_S(unsigned n, long bits);
BigReal lambda_from_S(unsigned n, std::span<const BigReal> etas, long bits);

/// lambda_n explicitly in the Stieltjes constants (multinomial theorem);
/// n = 1 is the empty-sum instantiation and reproduces the closed form.
BigReal lambda_from_stieltjes(unsigned n, const StieltjesTable& gammas, unsigned cap = closed_form_cap);

/// c_n explicitly in the Stieltjes constants; c_1 = gamma directly.
BigReal c_from_stieltjes(unsigned n, const StieltjesTable& gammas, unsigned cap = closed_form_cap);

/// Truncated sum over nontrivial zeros: sum_k 2 Re[1 - (1 - 1/rho_k)^n].
BigReal lambda_from_zeros(unsigned n, const ZeroOrdinates& zeros, long bits);

/// d_n by the exact polygamma sum, split into a direct part and a
/// binomial/Hurwitz tail; d_0 = ln(pi)/2.
BigReal d_exact(unsigned n, long bits);

/// Large-j approximation (1/2)[ln j - 1/(2j) - 1/(12 j^2) + gamma - ln 2 - 1].
BigReal d_asymptotic(unsigned j, long bits);

/// d^n/dz^n psi[1/(2(1-z))] at z = 0 via the reordered double sum.
BigReal digamma_deriv_at0(unsigned n, long bits);

/// L_{1/2}(z) = sum z^n / sqrt(n) for z in [-1, 0], accelerated alternating
/// summation; terms_budget caps the number of accelerated terms.
BigReal polylog_half(const BigReal& z, unsigned terms_budget, long bits);

/// One row of the constants table, serialized with decimal strings.
struct ConstantsRecord {
    unsigned n = 0;
    BigReal lambda_over_n;
    BigReal c;
    BigReal d;
    BigReal S1;
    BigReal S2;
    std::string method;
    long bits = 0;
    long agree_digits = 0;

    std::string to_json() const;
};

} // namespace xiconst
