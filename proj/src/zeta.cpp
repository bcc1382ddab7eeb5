#include "xiconst/zeta.hpp"

#include <cmath>
#include <algorithm>

#include "xiconst/bernoulli.hpp"
#include "xiconst/errors.hpp"

namespace xiconst {

namespace {

constexpr double kLowerSigma = -8.0;
constexpr long kGuardBits = 48;

// log2 of the Euler-Maclaurin remainder after V corrections with shift M,
// in doubles; an upper estimate good enough to pick parameters.
double remainder_log2(double abs_s, double sigma, long M, long V) {
    double v2 = 2.0 * V;
    double as = std::max(abs_s, 0.25);
    // |B_{2V+2}/(2V+2)!| ~ 2 (2pi)^{-2V-2}
    double b = 1.0 - (v2 + 2.0) * std::log2(2.0 * M_PI);
    // |(s)_{2V+1}| <= Gamma(|s|+2V+1)/Gamma(|s|)
    double rf = (std::lgamma(as + v2 + 1.0) - std::lgamma(as)) / std::log(2.0);
    double decay = -(sigma + v2 + 1.0) * std::log2(static_cast<double>(M));
    double fudge = std::log2(std::max(1.0, (as + v2 + 1.0) / (sigma + v2 + 1.0)));
    return b + rf + decay + fudge;
}

EmParams choose_params(double abs_s, double sigma, long bits) {
    long target = -(bits + 12);
    EmParams best{0, 0};
    double best_cost = 0;
    long v_floor = static_cast<long>(std::ceil(std::max(2.0, (-sigma + 2.0) / 2.0)));
    for (long V = v_floor; V <= 2 * bits + 64; V = std::max(V + 4, V + V / 4)) {
        // smallest M with remainder below target, given V
        double v2 = 2.0 * V;
        double rhs = remainder_log2(abs_s, sigma, 1, V) - target;
        double l2M = rhs / (sigma + v2 + 1.0);
        if (l2M > 40) continue; // unattainable M for this V
        long M = std::max<long>(2, static_cast<long>(std::ceil(std::exp2(std::max(1.0, l2M)))) + 1);
        while (remainder_log2(abs_s, sigma, M, V) > target) M = M + M / 8 + 1;
        double cost = 8.0 * M + 1.5 * V;
        if (best.shift_m == 0 || cost < best_cost) {
            best = {M, V};
            best_cost = cost;
        }
    }
    if (best.shift_m == 0) throw precision_error("zeta: no Euler-Maclaurin parameters reach target");
    return best;
}

void check_domain(double sigma, bool is_one) {
    if (is_one) throw domain_error("zeta: pole at s = 1");
    if (sigma <= kLowerSigma) throw domain_error("zeta: Re s <= -8 unsupported");
}

// extra working bits when s is close to the pole (1/(s-1) amplifies)
long pole_slack(const BigReal& dist) {
    if (dist.is_zero()) return 0;
    long e = static_cast<long>(mpfr_get_exp(dist.raw()));
    return e < 0 ? -e + 4 : 0;
}

} // namespace

EmParams zeta_params(const BigComplex& s, long bits) {
    double abs_s = abs(s).to_double();
    return choose_params(abs_s, s.real().to_double(), bits + kGuardBits);
}

BigComplex zeta(const BigComplex& s, long bits, const EmParams& p) {
    bool is_one = s.imag().is_zero() && mpfr_cmp_ui(s.real().raw(), 1) == 0;
    check_domain(s.real().to_double(), is_one);

    long work = bits + kGuardBits + pole_slack(abs(s - BigComplex(1.0, 0.0, 64)));
    BigReal sr(s.real()), si(s.imag());
    mpfr_prec_round(sr.raw(), work, MPFR_RNDN);
    mpfr_prec_round(si.raw(), work, MPFR_RNDN);
    BigComplex sw(sr, si);

    const long M = p.shift_m, V = p.order_v;
    BigComplex sum(work);
    BigReal lnk(work), ea(work), sb(work), cb(work), t1(work), t2(work);
    // sum_{k=1}^{M-1} k^{-s} = e^{-s ln k}
    for (long k = 1; k < M; k++) {
        mpfr_set_ui(lnk.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_log(lnk.raw(), lnk.raw(), MPFR_RNDN);
        mpfr_mul(t1.raw(), sr.raw(), lnk.raw(), MPFR_RNDN);
        mpfr_neg(t1.raw(), t1.raw(), MPFR_RNDN);
        mpfr_exp(ea.raw(), t1.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), si.raw(), lnk.raw(), MPFR_RNDN);
        mpfr_neg(t2.raw(), t2.raw(), MPFR_RNDN);
        mpfr_sin_cos(sb.raw(), cb.raw(), t2.raw(), MPFR_RNDN);
        mpfr_fma(sum.real().raw(), ea.raw(), cb.raw(), sum.real().raw(), MPFR_RNDN);
        mpfr_fma(sum.imag().raw(), ea.raw(), sb.raw(), sum.imag().raw(), MPFR_RNDN);
    }

    BigReal lnM(work);
    mpfr_set_ui(lnM.raw(), static_cast<unsigned long>(M), MPFR_RNDN);
    mpfr_log(lnM.raw(), lnM.raw(), MPFR_RNDN);
    BigComplex Ms = exp(BigComplex(-sr * lnM, -si * lnM)); // M^{-s}
    BigReal Mr = BigReal(M, work);

    // M^{1-s}/(s-1) + M^{-s}/2
    BigComplex one(1.0, 0.0, work);
    sum += (Mr * Ms) / (sw - one);
    sum += BigReal(0.5, work) * Ms;

    // corrections: B_{2v}/(2v)! (s)_{2v-1} M^{-s-2v+1}
    BigComplex rising = sw;
    BigReal mpow = BigReal(1L, work) / Mr; // M^{1-2v}
    for (long v = 1; v <= V; v++) {
        BigReal w = bernoulli_weight(static_cast<std::size_t>(v), work);
        sum += (w * mpow) * (rising * Ms);
        if (v < V) {
            BigReal f1(2 * v - 1, work), f2(2 * v, work);
            rising *= BigComplex(sr + f1, si) ;
            rising *= BigComplex(sr + f2, si);
            mpow /= Mr * Mr;
        }
    }

    BigReal rr = sum.real(), ri = sum.imag();
    mpfr_prec_round(rr.raw(), bits, MPFR_RNDN);
    mpfr_prec_round(ri.raw(), bits, MPFR_RNDN);
    return {rr, ri};
}

BigComplex zeta(const BigComplex& s, long bits) {
    if (s.imag().is_zero()) return {zeta_real(s.real(), bits), BigReal(0L, bits)};
    return zeta(s, bits, zeta_params(s, bits));
}

namespace {

// real Euler-Maclaurin for sum_{k>=0} (k+a)^{-s}; also serves zeta via a=1.
BigReal hurwitz_em(const BigReal& s, const BigReal& a, long bits) {
    double sd = s.to_double();
    long work = bits + kGuardBits + pole_slack(s - BigReal(1L, 64));
    EmParams p = choose_params(std::abs(sd), sd, work - kGuardBits + 8);

    BigReal sw = s, aw = a;
    mpfr_prec_round(sw.raw(), work, MPFR_RNDN);
    mpfr_prec_round(aw.raw(), work, MPFR_RNDN);

    const long M = p.shift_m, V = p.order_v;
    BigReal sum(work), base(work), term(work);
    BigReal neg_s = -sw;
    for (long k = 0; k < M; k++) {
        mpfr_add_ui(base.raw(), aw.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_pow(term.raw(), base.raw(), neg_s.raw(), MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    }
    BigReal Ma = aw + BigReal(M, work); // shift point
    BigReal Ms = pow(Ma, neg_s);        // (M+a)^{-s}
    sum += (Ma * Ms) / (sw - BigReal(1L, work));
    sum += ldexp2(Ms, -1);

    BigReal rising = sw;
    BigReal mpow = BigReal(1L, work) / Ma;
    for (long v = 1; v <= V; v++) {
        BigReal w = bernoulli_weight(static_cast<std::size_t>(v), work);
        sum += w * rising * Ms * mpow;
        if (v < V) {
            rising *= (sw + BigReal(2 * v - 1, work)) * (sw + BigReal(2 * v, work));
            mpow /= Ma * Ma;
        }
    }
    mpfr_prec_round(sum.raw(), bits, MPFR_RNDN);
    return sum;
}

} // namespace

BigReal zeta_real(const BigReal& s, long bits) {
    bool is_one = mpfr_cmp_ui(s.raw(), 1) == 0;
    check_domain(s.to_double(), is_one);
    return hurwitz_em(s, BigReal(1L, bits), bits);
}

BigReal zeta_error_bound(long bits) {
    return ldexp2(BigReal(1L, 64), -bits + 8);
}

BigReal hurwitz_zeta(const BigReal& s, const BigReal& a, long bits) {
    if (!(s > BigReal(1L, 64))) throw domain_error("hurwitz_zeta: requires s > 1");
    if (!(a > BigReal(0L, 64))) throw domain_error("hurwitz_zeta: requires a > 0");
    return hurwitz_em(s, a, bits);
}

BigReal polygamma_half(unsigned j, long bits) {
    if (j < 1) throw domain_error("polygamma_half: requires j >= 1");
    mpz_class fac, p2;
    mpz_fac_ui(fac.get_mpz_t(), j);
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, j + 1);
    p2 -= 1;
    BigReal z = zeta_real(BigReal(static_cast<long>(j) + 1, bits), bits + 8);
    BigReal r = BigReal::from_mpz(fac * p2, bits + 8) * z;
    if (j % 2 == 0) r = -r;
    mpfr_prec_round(r.raw(), bits, MPFR_RNDN);
    return r;
}

BigReal digamma_half(long bits) {
    return -BigReal::euler_gamma(bits) - ldexp2(BigReal::ln2(bits), 1);
}

} // namespace xiconst
