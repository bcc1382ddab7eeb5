#include <doctest.h>

#include <cmath>
#include <string>

#include "xiconst/big_complex.hpp"
#include "xiconst/contour.hpp"
#include "xiconst/errors.hpp"
#include "xiconst/series_routes.hpp"
#include "xiconst/stieltjes.hpp"
#include "xiconst/verification.hpp"

using namespace xiconst;

namespace {

BigReal tol2(long e) { return ldexp2(BigReal(1L, 64), e); }

std::string zeros_path() { return std::string(XICONST_TEST_DATA_DIR) + "/zeros100.txt"; }

} // namespace

TEST_CASE("contour plan invariants") {
    CHECK_THROWS_AS(ContourPlan(1.2, 1024, 256, 8), domain_error);
    CHECK_THROWS_AS(ContourPlan(0.9, 1000, 256, 8), domain_error);  // not a power of two
    CHECK_THROWS_AS(ContourPlan(0.9, 64, 256, 16), domain_error);   // < 8 n_max
    CHECK_THROWS_AS(ContourPlan(0.9, 1024, 100, 16), domain_error); // bits below policy + amp
    ContourPlan p = ContourPlan::make_default(16);
    CHECK(p.samples >= 128);
    CHECK((p.samples & (p.samples - 1)) == 0);
}

TEST_CASE("f_eval at the marked points") {
    const long bits = 256;
    CHECK(f_eval(BigComplex(0.0, 0.0, bits), bits).is_zero());
    // F(-1) = ln[(1/2)(-zeta(1/2))]; digits frozen from the oracle
    BigComplex fm1 = f_eval(BigComplex(-1.0, 0.0, bits), bits);
    BigReal expect = BigReal::from_string("-0.314467960061168210298651379943830029446247392", bits);
    CHECK(abs(fm1.real() - expect) < tol2(-140));
    CHECK(abs(fm1.imag()) < tol2(-bits + 24));
    // conjugate symmetry off the axis
    BigComplex z(0.3, 0.4, bits);
    BigComplex a = f_eval(z, bits);
    BigComplex b = f_eval(conj(z), bits);
    CHECK(abs(a - conj(b)) < tol2(-bits + 24));
    CHECK_THROWS_AS(f_eval(BigComplex(1.0, 0.0, bits), bits), domain_error);
    CHECK_THROWS_AS(f_eval(BigComplex(1.5, 0.0, bits), bits), domain_error);
}

TEST_CASE("fft matches the direct transform") {
    const long bits = 128;
    std::vector<BigComplex> x;
    for (int m = 0; m < 8; m++) x.push_back(BigComplex(0.25 * m - 0.6, 0.1 * m * m - 0.3, bits));
    std::vector<BigComplex> fx = x;
    fft_pow2(fx, bits);
    BigReal two_pi = ldexp2(BigReal::pi(bits), 1);
    for (int k = 0; k < 8; k++) {
        BigComplex direct(bits);
        for (int m = 0; m < 8; m++) {
            BigReal ang = -(two_pi * BigReal(static_cast<long>(k * m % 8), bits)) / BigReal(8L, bits);
            BigReal s(bits), c(bits);
            mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
            direct += x[m] * BigComplex(c, s);
        }
        CHECK(abs(fx[k] - direct) < tol2(-100));
    }
    std::vector<BigComplex> bad(3, BigComplex(bits));
    CHECK_THROWS_AS(fft_pow2(bad, bits), domain_error);
}

TEST_CASE("dft_magnitude and fft share the kernel convention") {
    const long bits = 128;
    std::vector<BigReal> x = {BigReal(0.5, bits), BigReal(-1.25, bits), BigReal(2L, bits),
                              BigReal(0.75, bits)};
    std::vector<BigReal> mags = dft_magnitude(x, bits);
    std::vector<BigComplex> cx;
    for (const BigReal& v : x) cx.push_back(BigComplex(v, BigReal(0L, bits)));
    fft_pow2(cx, bits);
    for (std::size_t k = 0; k < x.size(); k++)
        CHECK(abs(mags[k] - abs(cx[k])) < tol2(-100));
}

TEST_CASE("contour coefficients match the series route") {
    StieltjesTable t(10, 192);
    RealSeries F = f_series(t, 8);
    ContourPlan plan = ContourPlan::make_default(8);
    std::vector<BigReal> c = c_contour(plan);
    REQUIRE(c.size() == 8);
    CHECK(abs(c[0] - BigReal::euler_gamma(192)) < tol2(-120));
    for (unsigned n = 1; n <= 8; n++)
        CHECK(abs(c[n - 1] - F[n]) < tol2(-120) * max(BigReal(1L, 64), abs(F[n])));
}

TEST_CASE("doubling the sample count leaves coefficients stable (aliasing)") {
    ContourPlan base = ContourPlan::make_default(4);
    ContourPlan doubled(base.radius, base.samples * 2, base.bits, base.n_max);
    std::vector<BigReal> a = c_contour(base);
    std::vector<BigReal> b = c_contour(doubled);
    for (std::size_t i = 0; i < a.size(); i++) CHECK(abs(a[i] - b[i]) < tol2(-96));
}

TEST_CASE("radius robustness: r = 0.8 and r = 0.9 agree") {
    PrecisionPolicy policy;
    long amp8 = static_cast<long>(std::ceil(8 * std::log2(1.0 / 0.8)));
    ContourPlan p8(0.8, 1024, policy.effective_bits(8) + amp8 + 64, 8);
    ContourPlan p9 = ContourPlan::make_default(8);
    std::vector<BigReal> a = c_contour(p8);
    std::vector<BigReal> b = c_contour(p9);
    for (std::size_t i = 0; i < a.size(); i++) CHECK(abs(a[i] - b[i]) < tol2(-96));
}

TEST_CASE("f_from_zeros approximates F with truncation decay") {
    ZeroOrdinates zeros = ZeroOrdinates::load(zeros_path());
    const long bits = 192;
    BigComplex at0 = f_from_zeros(BigComplex(0.0, 0.0, bits), zeros, bits);
    CHECK(abs(at0) < BigReal(0.01, 64));
    BigComplex zm(-0.5, 0.0, bits);
    BigComplex approx = f_from_zeros(zm, zeros, bits);
    BigComplex direct = f_eval(zm, bits);
    BigReal err_full = abs(approx - direct);
    CHECK(err_full < BigReal(0.01, 64));
    BigReal err_half = abs(f_from_zeros(zm, zeros.truncated(50), bits) - direct);
    CHECK(err_full < err_half);
    CHECK_THROWS_AS(f_from_zeros(BigComplex(1.5, 0.0, bits), zeros, bits), domain_error);
}
