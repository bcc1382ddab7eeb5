#include "xiconst/contour.hpp"

#include <cmath>

#include "xiconst/errors.hpp"
#include "xiconst/series_routes.hpp"
#include "xiconst/zeta.hpp"

namespace xiconst {

namespace {

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

BigReal at_precision(const BigReal& x, long wp) {
    BigReal y = x;
    mpfr_prec_round(y.raw(), wp, MPFR_RNDN);
    return y;
}

} // namespace

ContourPlan::ContourPlan(double r, std::size_t m, long b, std::size_t n)
    : radius(r), samples(m), bits(b), n_max(n) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("ContourPlan: radius must be in (0,1)");
    if (!is_pow2(m)) throw domain_error("ContourPlan: sample count must be a power of two");
    if (m < 8 * n_max) throw domain_error("ContourPlan: needs samples >= 8 * n_max");
    long amp = static_cast<long>(std::ceil(n_max * std::log2(1.0 / r)));
    PrecisionPolicy policy;
    if (b < policy.effective_bits(static_cast<long>(n_max)) + amp)
        throw domain_error("ContourPlan: bits too low for r^{-n} amplification");
}

ContourPlan ContourPlan::make_default(std::size_t n_max, const PrecisionPolicy& policy) {
    double r = 0.9;
    std::size_t m = std::max<std::size_t>(1024, 8 * n_max);
    while (!is_pow2(m)) m++;
    long amp = static_cast<long>(std::ceil(n_max * std::log2(1.0 / r)));
    long b = policy.effective_bits(static_cast<long>(n_max)) + amp + 64;
    return ContourPlan(r, m, b, n_max);
}

BigComplex f_eval(const BigComplex& z, long bits) {
    if (z.is_zero()) return BigComplex(0.0, 0.0, bits);
    BigReal az = abs(z);
    if (az > BigReal(1L, 64)) throw domain_error("f_eval: requires |z| <= 1");
    BigComplex one(1.0, 0.0, bits);
    BigComplex omz = one - z;
    if (omz.is_zero()) throw domain_error("f_eval: z = 1 excluded");
    BigComplex s = one / omz;
    BigComplex g = (z / omz) * zeta(s, bits);
    return log(g);
}

void fft_pow2(std::vector<BigComplex>& x, long bits) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) throw domain_error("fft_pow2: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; i++) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    // twiddles e^{-2 pi i j / n}
    std::vector<BigComplex> w(n / 2, BigComplex(bits));
    BigReal two_pi = ldexp2(BigReal::pi(bits), 1);
    for (std::size_t j = 0; j < n / 2; j++) {
        BigReal ang = -(two_pi * BigReal(static_cast<long>(j), bits)) / BigReal(static_cast<long>(n), bits);
        BigReal s(bits), c(bits);
        mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
        w[j] = BigComplex(c, s);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; j++) {
                BigComplex u = x[i + j];
                BigComplex v = x[i + j + len / 2] * w[j * step];
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
            }
        }
    }
}

std::vector<BigReal> c_contour(const ContourPlan& plan) {
    const std::size_t M = plan.samples;
    const long wb = plan.bits;
    BigReal r = at_precision(BigReal(plan.radius, 64), wb);
    BigReal two_pi = ldexp2(BigReal::pi(wb), 1);

    // G on the upper half circle; the lower half is its conjugate since the
    // coefficients are real.
    std::vector<BigComplex> G(M / 2 + 1, BigComplex(wb));
    for (std::size_t m = 0; m <= M / 2; m++) {
        BigReal ang = two_pi * BigReal(static_cast<long>(m), wb) / BigReal(static_cast<long>(M), wb);
        BigReal sn(wb), cs(wb);
        mpfr_sin_cos(sn.raw(), cs.raw(), ang.raw(), MPFR_RNDN);
        BigComplex z(r * cs, r * sn);
        BigComplex one(1.0, 0.0, wb);
        BigComplex omz = one - z;
        BigComplex s = one / omz;
        G[m] = (z / omz) * zeta(s, wb);
    }

    // continuous log: anchor the phase at theta = pi where G is real positive
    std::vector<BigReal> phase(M / 2 + 1, BigReal(wb));
    BigReal pi_w = BigReal::pi(wb);
    BigReal half_pi = ldexp2(pi_w, -1);
    phase[M / 2] = arg(G[M / 2]);
    if (!(abs(phase[M / 2]) < half_pi))
        throw precision_error("c_contour: G not positive at theta = pi; branch anchor failed");
    for (std::size_t m = M / 2; m-- > 0;) {
        BigReal d = arg(G[m]) - arg(G[m + 1]);
        // wrap to (-pi, pi]
        while (d > pi_w) d -= two_pi;
        while (d < -pi_w) d += two_pi;
        if (!(abs(d) < half_pi))
            throw precision_error("c_contour: phase jump exceeds pi/2 between adjacent samples");
        phase[m] = phase[m + 1] + d;
    }
    if (!(abs(phase[0]) < half_pi))
        throw precision_error("c_contour: winding around the contour is nonzero");

    std::vector<BigComplex> F(M, BigComplex(wb));
    for (std::size_t m = 0; m <= M / 2; m++) {
        F[m] = BigComplex(log(abs(G[m])), phase[m]);
        if (m != 0 && m != M / 2) F[M - m] = conj(F[m]);
    }
    fft_pow2(F, wb);

    std::vector<BigReal> out;
    out.reserve(plan.n_max);
    BigReal Mr(static_cast<long>(M), wb);
    BigReal rinv = BigReal(1L, wb) / r;
    BigReal rpow(1L, wb);
    BigReal imag_tol = ldexp2(BigReal(1L, 64), -plan.bits / 4);
    for (std::size_t n = 1; n <= plan.n_max; n++) {
        rpow *= rinv;
        BigComplex cn = F[n] * rpow / Mr;
        BigReal scale = max(BigReal(1L, 64), abs(cn.real()));
        if (!(abs(cn.imag()) < imag_tol * scale))
            throw precision_error("c_contour: imaginary residue above tolerance at n = " + std::to_string(n));
        out.push_back(cn.real());
    }
    return out;
}

BigComplex f_from_zeros(const BigComplex& z, const ZeroOrdinates& zeros, long bits) {
    if (zeros.count() == 0) throw domain_error("f_from_zeros: empty ordinate list");
    BigReal az = abs(z);
    if (!(az < BigReal(1L, 64))) throw domain_error("f_from_zeros: requires |z| < 1");

    long wp = bits + 16;
    BigComplex one(1.0, 0.0, wp);
    BigComplex w = one - z;

    // ln Gamma[(3-2z)/(2(1-z))] = ln x + ln Gamma(x), x = 1/(2(1-z)),
    // with ln Gamma(x) evaluated from its series about z = 0.
    double azd = az.to_double();
    std::size_t terms = azd < 1e-30
        ? 8
        : std::min<std::size_t>(4000, static_cast<std::size_t>(std::ceil(wp / std::log2(1.0 / azd))) + 32);
    RealSeries dber = loggamma_half_series(terms, wp);
    BigComplex x = one / (w + w);
    BigComplex lngamma_x = series_eval(dber, BigComplex(at_precision(z.real(), wp), at_precision(z.imag(), wp)));
    BigComplex lngamma_shifted = log(x) + lngamma_x;

    BigComplex acc = ldexp2(BigReal::ln_pi(wp), -1) * (one / w)
                   - BigComplex(BigReal::ln2(wp), BigReal(0L, wp))
                   - lngamma_shifted;

    // conjugate pairs folded: ln[1 - A/w + A/w^2], A = 1/(1/4 + t^2)
    BigComplex winv = one / w;
    BigComplex winv2 = winv * winv;
    BigReal quarter(0.25, wp);
    for (std::size_t k = 0; k < zeros.count(); k++) {
        BigReal t = at_precision(zeros.ordinate(k), wp);
        BigReal A = BigReal(1L, wp) / (quarter + t * t);
        acc += log(one - A * winv + A * winv2);
    }
    BigReal rr = acc.real(), ri = acc.imag();
    mpfr_prec_round(rr.raw(), bits, MPFR_RNDN);
    mpfr_prec_round(ri.raw(), bits, MPFR_RNDN);
    return {rr, ri};
}

} // namespace xiconst
