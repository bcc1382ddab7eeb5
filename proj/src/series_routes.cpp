#include "xiconst/series_routes.hpp"

#include <gmpxx.h>

#include "xiconst/errors.hpp"
#include "xiconst/zeta.hpp"

namespace xiconst {

namespace {

long series_work_bits(long bits, std::size_t order) {
    return bits + static_cast<long>(order) + 64;
}

BigReal at_precision(const BigReal& x, long wp) {
    BigReal y = x;
    mpfr_prec_round(y.raw(), wp, MPFR_RNDN);
    return y;
}

// z/(1-z) = z + z^2 + ... as a series
RealSeries map_series(std::size_t N, long wp) {
    RealSeries t(N, wp);
    for (std::size_t j = 1; j <= N; j++) t[j] = BigReal(1L, wp);
    return t;
}

void round_to(RealSeries& s, long bits) {
    for (std::size_t j = 0; j <= s.order(); j++) mpfr_prec_round(s[j].raw(), bits, MPFR_RNDN);
}

} // namespace

RealSeries f_series(const StieltjesTable& gammas, std::size_t N) {
    if (gammas.k_max() < N) throw domain_error("f_series: needs gamma_0..gamma_N");
    long bits = gammas.bits();
    long wp = series_work_bits(bits, N);

    RealSeries t = map_series(N, wp);
    RealSeries G(N, wp);
    G[0] = BigReal(1L, wp);
    RealSeries p = t; // (z/(1-z))^{n+1}
    mpz_class fac(1);
    for (std::size_t n = 0; n + 1 <= N; n++) {
        if (n) {
            fac *= static_cast<unsigned long>(n);
            p = series_mul(p, t);
        }
        BigReal c = at_precision(gammas.gamma(n), wp) / BigReal::from_mpz(fac, wp);
        if (n % 2) c = -c;
        for (std::size_t j = n + 1; j <= N; j++) G[j] += c * p[j];
    }
    RealSeries F = series_log(G);
    round_to(F, bits);
    return F;
}

std::vector<BigReal> eta_series(const StieltjesTable& gammas, std::size_t N) {
    if (gammas.k_max() < N + 1) throw domain_error("eta_series: needs gamma_0..gamma_{N+1}");
    long bits = gammas.bits();
    long wp = series_work_bits(bits, N);

    // P(u) = (s-1) zeta(s), u = s-1: P = 1 + sum_n (-1)^n gamma_n u^{n+1}/n!
    RealSeries P(N + 1, wp);
    P[0] = BigReal(1L, wp);
    mpz_class fac(1);
    for (std::size_t n = 0; n <= N; n++) {
        if (n) fac *= static_cast<unsigned long>(n);
        BigReal c = at_precision(gammas.gamma(n), wp) / BigReal::from_mpz(fac, wp);
        if (n % 2) c = -c;
        P[n + 1] = c;
    }
    RealSeries Pprime(N, wp), Ptrunc(N, wp);
    for (std::size_t j = 0; j <= N; j++) {
        Pprime[j] = BigReal(static_cast<long>(j + 1), wp) * P[j + 1];
        Ptrunc[j] = P[j];
    }
    RealSeries Q = series_mul(Pprime, series_recip(Ptrunc));

    std::vector<BigReal> eta;
    eta.reserve(N + 1);
    for (std::size_t j = 0; j <= N; j++) {
        BigReal e = -Q[j];
        mpfr_prec_round(e.raw(), bits, MPFR_RNDN);
        eta.push_back(std::move(e));
    }
    return eta;
}

RealSeries loggamma_half_series(std::size_t N, long bits) {
    long wp = series_work_bits(bits, N);

    // Taylor of ln Gamma(1/2 + w) with w = z/(2(1-z)); psi^{(k-1)}(1/2) in
    // closed form keeps the composition exact through z^N.
    RealSeries w(N, wp);
    BigReal half(0.5, wp);
    for (std::size_t j = 1; j <= N; j++) w[j] = half;

    RealSeries d(N, wp);
    d[0] = ldexp2(BigReal::ln_pi(wp), -1);
    BigReal psi_half = digamma_half(wp);
    for (std::size_t j = 1; j <= N; j++) d[j] = psi_half * w[j];

    RealSeries wp_pow = w;
    for (std::size_t k = 2; k <= N; k++) {
        wp_pow = series_mul(wp_pow, w);
        // (-1)^k (2^k - 1) zeta(k) / k
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k));
        p2 -= 1;
        BigReal c = BigReal::from_mpz(p2, wp) * zeta_real(BigReal(static_cast<long>(k), wp), wp)
                    / BigReal(static_cast<long>(k), wp);
        if (k % 2) c = -c;
        for (std::size_t j = k; j <= N; j++) d[j] += c * wp_pow[j];
    }
    round_to(d, bits);
    return d;
}

BigComplex series_eval(const RealSeries& a, const BigComplex& z) {
    long bits = std::max(a.bits(), z.precision());
    BigComplex acc(bits);
    for (std::size_t j = a.order() + 1; j-- > 0;) {
        acc = acc * z;
        acc += BigComplex(a[j], BigReal(0L, bits));
    }
    return acc;
}

BigReal series_eval(const RealSeries& a, const BigReal& x) {
    long bits = std::max(a.bits(), x.precision());
    BigReal acc(0L, bits);
    for (std::size_t j = a.order() + 1; j-- > 0;) {
        acc = acc * x + a[j];
    }
    return acc;
}

std::vector<BigReal> lambda_series(const StieltjesTable& gammas, std::size_t N) {
    long bits = gammas.bits();
    RealSeries F = f_series(gammas, N);
    RealSeries d = loggamma_half_series(N, bits);
    BigReal half_ln_pi = ldexp2(BigReal::ln_pi(bits + 8), -1);

    std::vector<BigReal> lam;
    lam.reserve(N + 1);
    // z^0: F_0 + 0 - ln(pi)/2 + d_0 must vanish under xi_Li
    BigReal c0 = F[0] - half_ln_pi + d[0];
    if (!(abs(c0) < ldexp2(BigReal(1L, 64), -bits / 2)))
        throw precision_error("lambda_series: z^0 coefficient does not vanish");
    lam.push_back(std::move(c0));
    for (std::size_t n = 1; n <= N; n++) {
        BigReal v = F[n] + BigReal(1L, bits) / BigReal(static_cast<long>(n), bits) - half_ln_pi + d[n];
        mpfr_prec_round(v.raw(), bits, MPFR_RNDN);
        lam.push_back(std::move(v));
    }
    return lam;
}

} // namespace xiconst
