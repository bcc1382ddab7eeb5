#include "xiconst/constants.hpp"

#include <json.hpp>

#include <cmath>

#include "xiconst/big_complex.hpp"
#include "xiconst/compositions.hpp"
#include "xiconst/errors.hpp"
#include "xiconst/precision.hpp"
#include "xiconst/series_routes.hpp"
#include "xiconst/zeta.hpp"

namespace xiconst {

namespace {

BigReal at_precision(const BigReal& x, long wp) {
    BigReal y = x;
    mpfr_prec_round(y.raw(), wp, MPFR_RNDN);
    return y;
}

BigReal rounded(BigReal x, long bits) {
    mpfr_prec_round(x.raw(), bits, MPFR_RNDN);
    return x;
}

// gamma + ln pi + 2 ln 2
BigReal gamma_lnpi_2ln2(long wp) {
    return BigReal::euler_gamma(wp) + BigReal::ln_pi(wp) + ldexp2(BigReal::ln2(wp), 1);
}

// sum_h (1/h) sum over multisets of h nonnegatives summing to j-h of
// weight * prod gamma_{j_b}/j_b! -- the shared inner sum of the multinomial
// closed forms; eta_{j-1} = (-1)^j j * inner(j)
BigReal multinomial_inner(unsigned j, const StieltjesTable& gammas, long wp) {
    // gamma_v / v! at working precision, v <= j-1
    std::vector<BigReal> gfac;
    gfac.reserve(j);
    mpz_class fac(1);
    for (unsigned v = 0; v < j; v++) {
        if (v) fac *= v;
        gfac.push_back(at_precision(gammas.gamma(v), wp) / BigReal::from_mpz(fac, wp));
    }
    BigReal total(0L, wp);
    for (unsigned h = 1; h <= j; h++) {
        BigReal hsum(0L, wp);
        CompositionCursor cur(j - h, h);
        do {
            BigReal prod(1L, wp);
            for (unsigned part : cur.parts()) prod *= gfac[part];
            hsum += BigReal::from_mpz(cur.weight(), wp) * prod;
        } while (cur.next());
        total += hsum / BigReal(static_cast<long>(h), wp);
    }
    return total;
}

} // namespace

std::vector<BigReal> s1_range(unsigned n_max, long bits) {
    if (n_max < 2) throw domain_error("s1: needs n >= 2");
    long wp = bits + n_max + 48;
    std::vector<BigReal> zt(n_max + 1, BigReal(wp)); // zt[m] = (1 - 2^{-m}) zeta(m)
    for (unsigned m = 2; m <= n_max; m++) {
        BigReal z = zeta_real(BigReal(static_cast<long>(m), wp), wp);
        BigReal f = BigReal(1L, wp) - ldexp2(BigReal(1L, wp), -static_cast<long>(m));
        zt[m] = f * z;
    }
    std::vector<BigReal> out;
    out.reserve(n_max - 1);
    for (unsigned n = 2; n <= n_max; n++) {
        BigReal acc(0L, wp);
        for (unsigned m = 2; m <= n; m++) {
            BigReal term = BigReal::from_mpz(binomial(n, m), wp) * zt[m];
            if (m % 2) acc -= term; else acc += term;
        }
        out.push_back(rounded(acc, bits));
    }
    return out;
}

BigReal s1(unsigned n, long bits) {
    if (n < 2) throw domain_error("s1: needs n >= 2");
    return s1_range(n, bits).back();
}

BigReal s2(unsigned n, std::span<const BigReal> etas) {
    if (n < 1) throw domain_error("s2: needs n >= 1");
    if (etas.size() < n) throw domain_error("s2: needs eta_0..eta_{n-1}");
    long bits = etas[0].precision();
    long wp = bits + n + 32;
    BigReal acc(0L, wp);
    for (unsigned m = 1; m <= n; m++)
        acc += BigReal::from_mpz(binomial(n, m), wp) * at_precision(etas[m - 1], wp);
    return rounded(-acc, bits);
}

BigReal eta_from_stieltjes(unsigned k, const StieltjesTable& gammas, unsigned cap) {
    if (k < 2) throw domain_error("eta_from_stieltjes: needs k >= 2");
    if (k > cap) throw domain_error("eta_from_stieltjes: above closed-form cap");
    if (gammas.k_max() + 1 < k) throw domain_error("eta_from_stieltjes: needs gamma_0..gamma_{k-1}");
    long bits = gammas.bits();
    long wp = bits + k + 48;
    BigReal r = BigReal(static_cast<long>(k), wp) * multinomial_inner(k, gammas, wp);
    if (k % 2) r = -r;
    return rounded(r, bits);
}

BigReal eta_limit_oracle(unsigned k, const MangoldtTable& sieve, std::uint32_t N, long bits) {
    if (N > sieve.limit()) throw domain_error("eta_limit_oracle: N beyond sieve limit");
    BigReal acc(0L, bits);
    BigReal lnm(bits), t(bits);
    for (std::uint32_t m = 2; m <= N; m++) {
        std::uint32_t p = sieve.prime_power_base(m);
        if (p == 0) continue;
        // Lambda(m) ln^k m / m
        BigReal lam = log(BigReal(static_cast<unsigned long>(p), bits));
        mpfr_set_ui(lnm.raw(), m, MPFR_RNDN);
        mpfr_log(lnm.raw(), lnm.raw(), MPFR_RNDN);
        mpfr_pow_ui(t.raw(), lnm.raw(), k, MPFR_RNDN);
        acc += lam * t / BigReal(static_cast<unsigned long>(m), bits);
    }
    BigReal lnN = log(BigReal(static_cast<unsigned long>(N), bits));
    acc -= pow(lnN, static_cast<long>(k) + 1) / BigReal(static_cast<long>(k) + 1, bits);
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), k);
    BigReal r = acc / BigReal::from_mpz(fac, bits);
    if (k % 2) r = -r;
    return r;
}

BigReal lambda_from_S(unsigned n, long bits) {
    if (n < 1) throw domain_error("lambda_from_S: needs n >= 1");
    PrecisionPolicy policy;
    long wb = std::max(bits, policy.effective_bits(static_cast<long>(n)));
    StieltjesTable gammas(n, wb + 16);
    std::vector<BigReal> etas = eta_series(gammas, n - 1);
    return rounded(lambda_from_S(n, etas, wb), bits);
}

BigReal lambda_from_S(unsigned n, std::span<const BigReal> etas, long bits) {
    long wp = bits + n + 48;
    BigReal acc = BigReal(1L, wp) + s2(n, etas);
    if (n >= 2) acc += at_precision(s1(n, bits + n + 16), wp);
    acc -= BigReal(static_cast<long>(n), wp) * ldexp2(gamma_lnpi_2ln2(wp), -1);
    return rounded(acc, bits);
}

BigReal lambda_from_stieltjes(unsigned n, const StieltjesTable& gammas, unsigned cap) {
    if (n < 1) throw domain_error("lambda_from_stieltjes: needs n >= 1");
    if (n > cap) throw domain_error("lambda_from_stieltjes: above closed-form cap");
    long bits = gammas.bits();
    long wp = bits + n + 48;
    BigReal g = BigReal::euler_gamma(wp);
    BigReal acc = BigReal(1L, wp)
                - BigReal(static_cast<long>(n), wp)
                      * ldexp2(BigReal::ln_pi(wp) + ldexp2(BigReal::ln2(wp), 1) - g, -1);
    if (n >= 2) acc += at_precision(s1(n, bits + n + 16), wp);
    for (unsigned j = 2; j <= n; j++) {
        BigReal term = BigReal::from_mpz(binomial(n, j) * j, wp) * multinomial_inner(j, gammas, wp);
        if (j % 2) acc += term; else acc -= term;
    }
    return rounded(acc, bits);
}

BigReal c_from_stieltjes(unsigned n, const StieltjesTable& gammas, unsigned cap) {
    if (n < 1) throw domain_error("c_from_stieltjes: needs n >= 1");
    long bits = gammas.bits();
    if (n == 1) return rounded(BigReal::euler_gamma(bits + 8), bits);
    if (n > cap) throw domain_error("c_from_stieltjes: above closed-form cap");
    long wp = bits + n + 48;
    BigReal acc(0L, wp);
    for (unsigned j = 2; j <= n; j++) {
        BigReal term = BigReal::from_mpz(binomial(n, j) * j, wp) * multinomial_inner(j, gammas, wp);
        if (j % 2) acc -= term; else acc += term;
    }
    return rounded(BigReal::euler_gamma(wp) - acc / BigReal(static_cast<long>(n), wp), bits);
}

BigReal lambda_from_zeros(unsigned n, const ZeroOrdinates& zeros, long bits) {
    if (zeros.count() == 0) throw domain_error("lambda_from_zeros: empty ordinate list");
    BigReal acc(0L, bits);
    BigReal half(0.5, bits), one(1L, bits), two(2L, bits);
    for (std::size_t k = 0; k < zeros.count(); k++) {
        BigReal t = at_precision(zeros.ordinate(k), bits);
        BigComplex rho(half, t);
        BigComplex w = (rho - BigComplex(one, BigReal(0L, bits))) / rho; // 1 - 1/rho
        BigComplex wn = pow(w, n);
        acc += two * (one - wn.real());
    }
    return acc;
}

BigReal d_exact(unsigned n, long bits) {
    if (n == 0) return ldexp2(BigReal::ln_pi(bits), -1);
    long wp = bits + 4 * static_cast<long>(std::ceil(std::log2(n + 2.0))) + 48;
    BigReal acc(0L, wp);
    if (n >= 2) {
        unsigned long mstar = std::max<unsigned long>(64, static_cast<unsigned long>(n) * n);
        BigReal u(wp), v(wp), t(wp);
        for (unsigned long m = 1; m <= mstar; m++) {
            // 2(1 - 1/m)^n - 2(1 - 1/(2m))^n + n/m
            mpfr_set_ui(u.raw(), m, MPFR_RNDN);
            mpfr_ui_div(u.raw(), 1, u.raw(), MPFR_RNDN);
            mpfr_ui_sub(v.raw(), 1, u.raw(), MPFR_RNDN);
            mpfr_pow_ui(t.raw(), v.raw(), n, MPFR_RNDN);
            mpfr_mul_2si(t.raw(), t.raw(), 1, MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
            mpfr_div_2si(u.raw(), u.raw(), 1, MPFR_RNDN);
            mpfr_ui_sub(v.raw(), 1, u.raw(), MPFR_RNDN);
            mpfr_pow_ui(t.raw(), v.raw(), n, MPFR_RNDN);
            mpfr_mul_2si(t.raw(), t.raw(), 1, MPFR_RNDN);
            mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
            mpfr_set_ui(t.raw(), n, MPFR_RNDN);
            mpfr_div_ui(t.raw(), t.raw(), m, MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
        }
        // tail: g(m) = 2 sum_{k=2}^n (-1)^k C(n,k)(1 - 2^{-k}) m^{-k} summed
        // over m > m* via Hurwitz zeta; terms fall off geometrically.
        BigReal a = BigReal(static_cast<unsigned long>(mstar + 1), wp);
        for (unsigned k = 2; k <= n; k++) {
            double est = 1.0 + std::lgamma(n + 1.0) / std::log(2.0)
                         - std::lgamma(k + 1.0) / std::log(2.0) - std::lgamma(n - k + 1.0) / std::log(2.0)
                         - static_cast<double>(k - 1) * std::log2(static_cast<double>(mstar));
            if (est < -(wp + 8.0)) break;
            BigReal hz = hurwitz_zeta(BigReal(static_cast<long>(k), wp), a, wp);
            BigReal f = BigReal(1L, wp) - ldexp2(BigReal(1L, wp), -static_cast<long>(k));
            BigReal term = ldexp2(BigReal::from_mpz(binomial(n, k), wp) * f * hz, 1);
            if (k % 2) acc -= term; else acc += term;
        }
    }
    BigReal r = ldexp2(digamma_half(wp), -1)
              + acc / ldexp2(BigReal(static_cast<long>(n), wp), 1);
    return rounded(r, bits);
}

BigReal d_asymptotic(unsigned j, long bits) {
    if (j < 1) throw domain_error("d_asymptotic: needs j >= 1");
    long wp = bits + 16;
    BigReal jr(static_cast<long>(j), wp);
    BigReal r = log(jr) - BigReal(1L, wp) / ldexp2(jr, 1)
              - BigReal(1L, wp) / (BigReal(12L, wp) * jr * jr)
              + BigReal::euler_gamma(wp) - BigReal::ln2(wp) - BigReal(1L, wp);
    return rounded(ldexp2(r, -1), bits);
}

BigReal digamma_deriv_at0(unsigned n, long bits) {
    if (n < 1) throw domain_error("digamma_deriv_at0: needs n >= 1");
    long wp = bits + 4 * static_cast<long>(std::ceil(std::log2(n + 2.0))) + 48;
    unsigned long mstar = std::max<unsigned long>(64, static_cast<unsigned long>(n) * n);
    BigReal acc(0L, wp);
    BigReal u(wp), v(wp), t(wp), m2(wp);
    for (unsigned long m = 1; m <= mstar; m++) {
        mpfr_set_ui(u.raw(), m, MPFR_RNDN);
        mpfr_ui_div(u.raw(), 1, u.raw(), MPFR_RNDN);
        mpfr_sqr(m2.raw(), u.raw(), MPFR_RNDN); // 1/m^2
        mpfr_ui_sub(v.raw(), 1, u.raw(), MPFR_RNDN);
        mpfr_pow_ui(t.raw(), v.raw(), n - 1, MPFR_RNDN);
        mpfr_mul_2si(t.raw(), t.raw(), 1, MPFR_RNDN);
        mpfr_fma(acc.raw(), t.raw(), m2.raw(), acc.raw(), MPFR_RNDN);
        mpfr_div_2si(u.raw(), u.raw(), 1, MPFR_RNDN);
        mpfr_ui_sub(v.raw(), 1, u.raw(), MPFR_RNDN);
        mpfr_pow_ui(t.raw(), v.raw(), n - 1, MPFR_RNDN);
        mpfr_div_2si(t.raw(), t.raw(), 1, MPFR_RNDN);
        mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_fma(acc.raw(), t.raw(), m2.raw(), acc.raw(), MPFR_RNDN);
    }
    // tail: f(m) = sum_{k=0}^{n-1} (-1)^k C(n-1,k) (2 - 2^{-k-1}) m^{-k-2}
    BigReal a(static_cast<unsigned long>(mstar + 1), wp);
    for (unsigned k = 0; k <= n - 1; k++) {
        double est = 2.0 + std::lgamma(static_cast<double>(n)) / std::log(2.0)
                     - std::lgamma(k + 1.0) / std::log(2.0) - std::lgamma(static_cast<double>(n - k)) / std::log(2.0)
                     - static_cast<double>(k + 1) * std::log2(static_cast<double>(mstar));
        if (est < -(wp + 8.0)) break;
        BigReal hz = hurwitz_zeta(BigReal(static_cast<long>(k) + 2, wp), a, wp);
        BigReal f = BigReal(2L, wp) - ldexp2(BigReal(1L, wp), -static_cast<long>(k) - 1);
        BigReal term = BigReal::from_mpz(binomial(n - 1, k), wp) * f * hz;
        if (k % 2) acc -= term; else acc += term;
    }
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), n);
    return rounded(BigReal::from_mpz(fac, wp) * acc, bits);
}

BigReal polylog_half(const BigReal& z, unsigned terms_budget, long bits) {
    BigReal zero(0L, 64), neg_one(-1L, 64);
    if (!(z <= zero && z >= neg_one)) throw domain_error("polylog_half: requires z in [-1, 0]");
    if (z.is_zero()) return BigReal(0L, bits);

    long wp = bits + 32;
    unsigned needed = static_cast<unsigned>(std::ceil(static_cast<double>(bits + 16) / 2.543)) + 8;
    if (needed > terms_budget)
        throw precision_error("polylog_half: terms budget exhausted before target accuracy");

    // accelerated alternating sum: L(z) = -x sum_k (-1)^k a_k,
    // a_k = x^k / sqrt(k+1), x = -z
    BigReal x = at_precision(-z, wp);
    unsigned nterms = needed;
    BigReal d = pow(BigReal(3L, wp) + sqrt(BigReal(8L, wp)), static_cast<long>(nterms));
    d = ldexp2(d + BigReal(1L, wp) / d, -1);
    BigReal b(-1L, wp), c = -d, s(0L, wp);
    BigReal xk(1L, wp);
    for (unsigned k = 0; k < nterms; k++) {
        c = b - c;
        BigReal ak = xk / sqrt(BigReal(static_cast<long>(k) + 1, wp));
        s += c * ak;
        xk *= x;
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        BigReal num = BigReal(static_cast<long>(k) + static_cast<long>(nterms), wp)
                      * BigReal(static_cast<long>(k) - static_cast<long>(nterms), wp);
        BigReal den = (BigReal(static_cast<long>(k), wp) + BigReal(0.5, wp))
                      * BigReal(static_cast<long>(k) + 1, wp);
        b = b * num / den;
    }
    return rounded(-(x * s / d), bits);
}

std::string ConstantsRecord::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["lambda_over_n"] = lambda_over_n.to_decimal();
    j["c"] = c.to_decimal();
    j["d"] = d.to_decimal();
    j["S1"] = S1.to_decimal();
    j["S2"] = S2.to_decimal();
    j["method"] = method;
    j["bits"] = bits;
    j["agree_digits"] = agree_digits;
    return j.dump();
}

} // namespace xiconst
