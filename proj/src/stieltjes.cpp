#include "xiconst/stieltjes.hpp"

#include <cmath>
#include <algorithm>

#include "xiconst/bernoulli.hpp"
#include "xiconst/errors.hpp"

namespace xiconst {

namespace {

// Correction order: smallest V whose term magnitude (with the u-polynomial
// growth factor folded in) drops below the target, in doubles.
long choose_v(long M, long wp) {
    double target = -(static_cast<double>(wp) + 12.0);
    for (long v = 2; v <= static_cast<long>(3.3 * M) + 16; v++) {
        double v2 = 2.0 * v;
        // |B_2v|/(2v) M^{-2v} ~ 2 (2v)! / ((2pi)^2v (2v)) M^{-2v}, Stirling
        double mag = 1.0 + (std::lgamma(v2 + 1.0) / std::log(2.0)) - v2 * std::log2(2.0 * M_PI)
                     - std::log2(v2) - v2 * std::log2(static_cast<double>(M));
        double poly = (std::log(v2) + 1.5) * 1.4427; // coefficient growth margin
        if (mag + poly < target) return v;
    }
    return -1;
}

// gamma_0..gamma_K with shift M at working precision wp.
std::vector<BigReal> stieltjes_run(std::size_t K, long M, long wp) {
    long V = choose_v(M, wp);
    if (V < 0) throw precision_error("stieltjes: shift too small for requested precision");

    std::vector<BigReal> coeff(K + 1, BigReal(wp));
    BigReal lnk(wp), t(wp), tmp(wp);

    // sum_{k=1}^{M-1} (1/k) e^{-u ln k}
    for (long k = 1; k < M; k++) {
        mpfr_set_ui(lnk.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_log(lnk.raw(), lnk.raw(), MPFR_RNDN);
        mpfr_set_ui(t.raw(), 1, MPFR_RNDN);
        mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        for (std::size_t j = 0; j <= K; j++) {
            mpfr_add(coeff[j].raw(), coeff[j].raw(), t.raw(), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), lnk.raw(), MPFR_RNDN);
            mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(j + 1), MPFR_RNDN);
            mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
        }
    }

    BigReal lnM(wp);
    mpfr_set_ui(lnM.raw(), static_cast<unsigned long>(M), MPFR_RNDN);
    mpfr_log(lnM.raw(), lnM.raw(), MPFR_RNDN);

    // (M^{-u} - 1)/u : coeff_j += (-lnM)^{j+1}/(j+1)!
    t = -lnM;
    for (std::size_t j = 0; j <= K; j++) {
        coeff[j] += t;
        mpfr_mul(t.raw(), t.raw(), lnM.raw(), MPFR_RNDN);
        mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(j + 2), MPFR_RNDN);
        mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
    }

    // e^{-u lnM} as a series, reused below
    std::vector<BigReal> expM(K + 1, BigReal(wp));
    mpfr_set_ui(expM[0].raw(), 1, MPFR_RNDN);
    for (std::size_t j = 1; j <= K; j++) {
        mpfr_mul(expM[j].raw(), expM[j - 1].raw(), lnM.raw(), MPFR_RNDN);
        mpfr_div_ui(expM[j].raw(), expM[j].raw(), static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_neg(expM[j].raw(), expM[j].raw(), MPFR_RNDN);
    }

    // M^{-u}/(2M)
    for (std::size_t j = 0; j <= K; j++) {
        mpfr_div_ui(tmp.raw(), expM[j].raw(), 2 * static_cast<unsigned long>(M), MPFR_RNDN);
        coeff[j] += tmp;
    }

    // corrections: sum_v B_{2v}/(2v)! R_v(u) M^{-2v} M^{-u},
    // R_v(u) = prod_{i=1}^{2v-1} (i + u); accumulate T = sum_v c_v R_v first.
    std::vector<BigReal> R(K + 1, BigReal(wp)), T(K + 1, BigReal(wp));
    mpfr_set_ui(R[0].raw(), 1, MPFR_RNDN);
    BigReal mpow(1L, wp);
    BigReal m2 = BigReal(M, wp) * BigReal(M, wp);
    for (long v = 1; v <= V; v++) {
        for (long f = 2 * v - 2; f <= 2 * v - 1; f++) {
            if (f == 0) continue;
            for (std::size_t j = K; j >= 1; j--) {
                mpfr_mul_ui(R[j].raw(), R[j].raw(), static_cast<unsigned long>(f), MPFR_RNDN);
                mpfr_add(R[j].raw(), R[j].raw(), R[j - 1].raw(), MPFR_RNDN);
            }
            mpfr_mul_ui(R[0].raw(), R[0].raw(), static_cast<unsigned long>(f), MPFR_RNDN);
        }
        mpow /= m2;
        BigReal c = bernoulli_weight(static_cast<std::size_t>(v), wp) * mpow;
        for (std::size_t j = 0; j <= K; j++) {
            mpfr_fma(T[j].raw(), c.raw(), R[j].raw(), T[j].raw(), MPFR_RNDN);
        }
    }
    // coeff += T * expM (Cauchy product)
    for (std::size_t j = 0; j <= K; j++) {
        for (std::size_t i = 0; i <= j; i++) {
            mpfr_fma(coeff[j].raw(), T[i].raw(), expM[j - i].raw(), coeff[j].raw(), MPFR_RNDN);
        }
    }

    // gamma_j = (-1)^j j! coeff_j
    std::vector<BigReal> out;
    out.reserve(K + 1);
    mpz_class fac(1);
    for (std::size_t j = 0; j <= K; j++) {
        if (j) fac *= static_cast<unsigned long>(j);
        BigReal g = BigReal::from_mpz(fac, wp) * coeff[j];
        if (j % 2) g = -g;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

StieltjesTable::StieltjesTable(std::size_t k_max, long bits) : bits_(bits) {
    if (k_max > max_supported_k)
        throw domain_error("StieltjesTable: k_max above supported cap (128)");
    if (bits < 64) throw domain_error("StieltjesTable: bits must be >= 64");

    // the shift must cover the internal working precision, which itself
    // grows with k_max through the cancellation allowance; iterate once
    long M = static_cast<long>(std::ceil(0.12 * static_cast<double>(bits))) + 24;
    long wp = bits;
    for (int pass = 0; pass < 2; pass++) {
        wp = bits + static_cast<long>(std::ceil(
                 (static_cast<double>(k_max) + 1.0) *
                 std::log2(std::max(std::log(2.0 * static_cast<double>(M)), 2.0)))) + 64;
        M = std::max(M, static_cast<long>(std::ceil(0.12 * static_cast<double>(wp))) + 24);
    }

    std::vector<BigReal> a = stieltjes_run(k_max, M, wp);
    std::vector<BigReal> b = stieltjes_run(k_max, 2 * M, wp);

    BigReal tol = ldexp2(BigReal(1L, 64), -bits + 16);
    for (std::size_t k = 0; k <= k_max; k++) {
        BigReal scale = max(BigReal(1L, 64), abs(b[k]));
        if (!(abs(a[k] - b[k]) < tol * scale))
            throw precision_error("stieltjes: N-doubling stability failed at k = " + std::to_string(k));
    }
    values_.reserve(k_max + 1);
    for (auto& g : b) {
        mpfr_prec_round(g.raw(), bits, MPFR_RNDN);
        values_.push_back(std::move(g));
    }
}

LaurentEval zeta_laurent_eval(const BigReal& s, const StieltjesTable& table) {
    return zeta_laurent_eval(s, table, ldexp2(BigReal(1L, 64), -table.bits() / 4));
}

LaurentEval zeta_laurent_eval(const BigReal& s, const StieltjesTable& table, const BigReal& tolerance) {
    long bits = table.bits();
    BigReal u = s - BigReal(1L, bits);
    BigReal au = abs(u);
    if (u.is_zero()) throw domain_error("zeta_laurent_eval: pole at s = 1");
    if (!(au < BigReal(1L, 64))) throw domain_error("zeta_laurent_eval: requires |s - 1| < 1");

    std::size_t K = table.k_max();
    BigReal acc(0L, bits), upow(1L, bits), fac(1L, bits);
    for (std::size_t n = 0; n <= K; n++) {
        if (n) {
            upow *= u;
            fac *= BigReal(static_cast<long>(n), bits);
        }
        BigReal term = table.gamma(n) * upow / fac;
        if (n % 2) acc -= term; else acc += term;
    }
    BigReal last = abs(table.gamma(K)) * pow(au, static_cast<long>(K)) / fac;
    BigReal tail = BigReal(4L, bits) * last / (BigReal(1L, bits) - au);
    if (!(tail < tolerance))
        throw precision_error("zeta_laurent_eval: truncation insufficient for tolerance");
    return {BigReal(1L, bits) / u + acc, tail};
}

} // namespace xiconst
