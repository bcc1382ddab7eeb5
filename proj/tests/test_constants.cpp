#include <doctest.h>

#include <mpfr.h>

#include <cmath>
#include <string>

#include "xiconst/big_real.hpp"
#include "xiconst/compositions.hpp"
#include "xiconst/constants.hpp"
#include "xiconst/errors.hpp"
#include "xiconst/series_routes.hpp"
#include "xiconst/verification.hpp"
#include "xiconst/zeta.hpp"

using namespace xiconst;

namespace {

BigReal tol2(long e) { return ldexp2(BigReal(1L, 64), e); }

std::string zeros_path() { return std::string(XICONST_TEST_DATA_DIR) + "/zeros100.txt"; }

} // namespace

TEST_CASE("composition weights total the ordered-tuple count C(j-1, h-1)") {
    for (unsigned j = 1; j <= 32; j++) {
        for (unsigned h = 1; h <= j; h++) {
            CompositionCursor cur(j - h, h);
            mpz_class total = 0;
            do {
                total += cur.weight();
            } while (cur.next());
            CHECK(total == binomial(j - 1, h - 1));
        }
    }
}

TEST_CASE("composition cursor enumerates multisets of fixed size") {
    // target 3 into 2 parts: {3,0} weight 2, {2,1} weight 2
    CompositionCursor cur(3, 2);
    CHECK(cur.parts()[0] == 3);
    CHECK(cur.parts()[1] == 0);
    CHECK(cur.weight() == 2);
    REQUIRE(cur.next());
    CHECK(cur.parts()[0] == 2);
    CHECK(cur.parts()[1] == 1);
    CHECK(cur.weight() == 2);
    CHECK(!cur.next());
}

TEST_CASE("S1(2) is pi^2/8 and the bounds hold") {
    const long bits = 256;
    BigReal pi = BigReal::pi(bits);
    CHECK(abs(s1(2, bits) - pi * pi / BigReal(8L, bits)) < tol2(-bits + 16));
    std::vector<BigReal> v = s1_range(40, bits);
    for (unsigned n = 2; n <= 40; n++) CHECK(s1_bounds_hold(n, v[n - 2], bits));
    CHECK_THROWS_AS(s1(1, bits), domain_error);
}

TEST_CASE("S1(50) satisfies the tail identity against d_exact") {
    const long bits = 256;
    BigReal lhs = s1(50, bits) / BigReal(50L, bits) - ldexp2(BigReal::euler_gamma(bits), -1);
    BigReal rhs = BigReal::ln2(bits) + d_exact(50, bits);
    CHECK(abs(lhs - rhs) < tol2(-bits / 2));
}

TEST_CASE("S2 closed values and the exact relation S2(n)/n = c_n") {
    StieltjesTable t(34, 256);
    std::vector<BigReal> etas = eta_series(t, 33);
    CHECK(abs(s2(1, etas) - BigReal::euler_gamma(256)) < tol2(-230));
    // n = 2: -2 eta_0 - eta_1 = 2 gamma - gamma^2 - 2 gamma_1 = 2 c_2
    BigReal ga = t.gamma(0);
    BigReal expect2 = ldexp2(ga, 1) - ga * ga - ldexp2(t.gamma(1), 1);
    CHECK(abs(s2(2, etas) - expect2) < tol2(-230));
    RealSeries F = f_series(t, 32);
    for (unsigned n = 1; n <= 32; n++) {
        BigReal cn = s2(n, etas) / BigReal(static_cast<long>(n), 256);
        CHECK(abs(cn - F[n]) < tol2(-200) * max(BigReal(1L, 64), abs(F[n])));
    }
    CHECK_THROWS_AS(s2(40, etas), domain_error);
}

TEST_CASE("eta_from_stieltjes matches hand expansion and the series route") {
    StieltjesTable t(24, 256);
    BigReal ga = t.gamma(0);
    BigReal eta1 = eta_from_stieltjes(2, t);
    CHECK(abs(eta1 - (ga * ga + ldexp2(t.gamma(1), 1))) < tol2(-230));
    std::vector<BigReal> etas = eta_series(t, 20);
    for (unsigned k = 2; k <= 20; k++) {
        BigReal e = eta_from_stieltjes(k, t);
        CHECK(abs(e - etas[k - 1]) < tol2(-190) * max(BigReal(1L, 64), abs(e)));
        CHECK((e.sign() > 0) == (k % 2 == 0)); // sign(eta_{k-1}) = (-1)^k
    }
    CHECK_THROWS_AS(eta_from_stieltjes(33, t), domain_error);
    CHECK_THROWS_AS(eta_from_stieltjes(1, t), domain_error);
}

TEST_CASE("eta limit oracle is a loose but converging sanity check") {
    MangoldtTable sieve(2000000);
    const long bits = 128;
    BigReal e0_small = eta_limit_oracle(0, sieve, 1000000, bits);
    BigReal gamma = BigReal::euler_gamma(bits);
    CHECK(abs(e0_small + gamma) < BigReal(0.01, 64));
    // doubling N strictly shrinks the error
    BigReal e0_big = eta_limit_oracle(0, sieve, 2000000, bits);
    CHECK(abs(e0_big + gamma) < abs(e0_small + gamma));
    // k = 1 within 0.1 of the series value
    StieltjesTable t(4, 192);
    std::vector<BigReal> etas = eta_series(t, 2);
    BigReal e1 = eta_limit_oracle(1, sieve, 1000000, bits);
    CHECK(abs(e1 - etas[1]) < BigReal(0.1, 64));
}

TEST_CASE("lambda_from_S reproduces the closed form at n = 1") {
    const long bits = 256;
    BigReal lam1 = lambda_from_S(1, bits);
    BigReal expect = -ldexp2(BigReal::ln_pi(bits), -1) + ldexp2(BigReal::euler_gamma(bits), -1)
                   + BigReal(1L, bits) - BigReal::ln2(bits);
    CHECK(abs(lam1 - expect) < tol2(-bits + 24));
}

TEST_CASE("lambda routes agree: S-route, stieltjes route, series route") {
    StieltjesTable t(16, 256);
    std::vector<BigReal> lam = lambda_series(t, 12);
    std::vector<BigReal> etas = eta_series(t, 11);
    for (unsigned n : {2u, 5u, 10u}) {
        BigReal from_series = BigReal(static_cast<long>(n), 256) * lam[n];
        BigReal from_s = lambda_from_S(n, etas, 256);
        BigReal from_st = lambda_from_stieltjes(n, t);
        CHECK(abs(from_series - from_s) < tol2(-190));
        CHECK(abs(from_series - from_st) < tol2(-190));
    }
    CHECK_THROWS_AS(lambda_from_stieltjes(33, t), domain_error);
}

TEST_CASE("lambda three-way agreement at the closed-form cap n = 32") {
    StieltjesTable t(34, 256);
    std::vector<BigReal> lam = lambda_series(t, 32);
    std::vector<BigReal> etas = eta_series(t, 31);
    BigReal from_series = BigReal(32L, 256) * lam[32];
    BigReal from_s = lambda_from_S(32, etas, 256);
    BigReal from_st = lambda_from_stieltjes(32, t);
    CHECK(abs(from_series - from_s) < tol2(-180));
    CHECK(abs(from_series - from_st) < tol2(-180));
}

TEST_CASE("eta decay tracks the trivial-zero radius (whole-table probe)") {
    // the expansion of zeta'/zeta about s = 1 converges in |s-1| < 3 (the
    // trivial zero at s = -2 is the nearest singularity), so
    // limsup |eta_j|^{1/j} = 1/3: a sensitive check of the high-index
    // Stieltjes constants feeding the series
    StieltjesTable t(66, 320);
    std::vector<BigReal> etas = eta_series(t, 64);
    for (unsigned j = 0; j <= 64; j++)
        CHECK((etas[j].sign() > 0) == (j % 2 == 1));
    double mag60 = std::pow(std::fabs(etas[60].to_double()), 1.0 / 60.0);
    CHECK(mag60 > 0.29);
    CHECK(mag60 < 0.36);
}

TEST_CASE("c_from_stieltjes matches the series route through n = 32") {
    StieltjesTable t(34, 320);
    RealSeries F = f_series(t, 32);
    for (unsigned n = 1; n <= 32; n++) {
        BigReal c = c_from_stieltjes(n, t);
        CHECK(abs(c - F[n]) < tol2(-230) * max(BigReal(1L, 64), abs(c)));
    }
    CHECK_THROWS_AS(c_from_stieltjes(33, t), domain_error);
}

TEST_CASE("lambda_from_zeros: truncated zero sums") {
    ZeroOrdinates zeros = ZeroOrdinates::load(zeros_path());
    REQUIRE(zeros.count() == 100);
    const long bits = 192;
    CHECK(lambda_from_zeros(0, zeros, bits).is_zero());
    BigReal lam1_closed = -ldexp2(BigReal::ln_pi(bits), -1) + ldexp2(BigReal::euler_gamma(bits), -1)
                        + BigReal(1L, bits) - BigReal::ln2(bits);
    BigReal full = lambda_from_zeros(1, zeros, bits);
    CHECK(abs(full - lam1_closed) < BigReal(0.01, 64));
    BigReal halfK = lambda_from_zeros(1, zeros.truncated(50), bits);
    CHECK(abs(full - lam1_closed) < abs(halfK - lam1_closed));
}

TEST_CASE("zero ordinate files reject malformed input") {
    CHECK_THROWS_AS(ZeroOrdinates::load("/nonexistent/zeros.txt"), parse_error);
    // descending pair
    std::string tmp = "/tmp/xiconst_bad_zeros.txt";
    {
        FILE* f = fopen(tmp.c_str(), "w");
        fputs("# comment\n14.13\n13.99\n", f);
        fclose(f);
    }
    try {
        ZeroOrdinates::load(tmp);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("d_exact closed forms and agreement with the series coefficients") {
    const long bits = 256;
    BigReal ga = BigReal::euler_gamma(bits);
    BigReal ln2v = BigReal::ln2(bits);
    CHECK(abs(d_exact(0, bits) - ldexp2(BigReal::ln_pi(bits), -1)) < tol2(-bits + 8));
    CHECK(abs(d_exact(1, bits) + ldexp2(ga, -1) + ln2v) < tol2(-bits + 24));
    BigReal pi = BigReal::pi(bits);
    BigReal d2 = -ldexp2(ga, -1) + pi * pi / BigReal(16L, bits) - ln2v;
    CHECK(abs(d_exact(2, bits) - d2) < tol2(-bits + 24));
    RealSeries d = loggamma_half_series(24, bits);
    for (unsigned n = 1; n <= 24; n++)
        CHECK(abs(d_exact(n, bits) - d[n]) < tol2(-bits + 32) * max(BigReal(1L, 64), abs(d[n])));
}

TEST_CASE("d_asymptotic error magnitude and decay rate") {
    const long bits = 256;
    BigReal e50 = abs(d_exact(50, bits) - d_asymptotic(50, bits));
    BigReal e100 = abs(d_exact(100, bits) - d_asymptotic(100, bits));
    CHECK(e100 < BigReal::from_string("1e-6", 64));
    BigReal ratio = e50 / e100;
    CHECK(ratio > BigReal(8L, 64));
    CHECK(ratio < BigReal(32L, 64));
    CHECK_THROWS_AS(d_asymptotic(0, bits), domain_error);
}

TEST_CASE("digamma_deriv_at0: n = 1 value and the Faa di Bruno route") {
    const long bits = 256;
    BigReal pi = BigReal::pi(bits);
    CHECK(abs(digamma_deriv_at0(1, bits) - pi * pi / BigReal(4L, bits)) < tol2(-bits + 24));
    // sum_{j=1}^n C(n,j) (n-1)!/(j-1)! psi^{(j)}(1/2) / 2^j
    for (unsigned n : {2u, 3u, 5u, 8u}) {
        BigReal fdb(0L, bits);
        mpz_class nm1_fac;
        mpz_fac_ui(nm1_fac.get_mpz_t(), n - 1);
        for (unsigned j = 1; j <= n; j++) {
            mpz_class jm1_fac;
            mpz_fac_ui(jm1_fac.get_mpz_t(), j - 1);
            mpz_class coef = binomial(n, j) * nm1_fac / jm1_fac;
            fdb += BigReal::from_mpz(coef, bits)
                 * ldexp2(polygamma_half(j, bits), -static_cast<long>(j));
        }
        BigReal direct = digamma_deriv_at0(n, bits);
        CHECK(abs(direct - fdb) < tol2(-bits + 40) * max(BigReal(1L, 64), abs(fdb)));
    }
}

TEST_CASE("digamma_deriv_at0 tracks the elementary-integral estimate for n >= 20") {
    const long bits = 192;
    for (unsigned n : {20u, 32u, 48u, 64u}) {
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), n);
        BigReal est = BigReal::from_mpz(fac, bits)
                    * ((BigReal(1L, bits) + ldexp2(BigReal(1L, bits), -static_cast<long>(n)))
                           / BigReal(static_cast<long>(n), bits)
                       - ldexp2(BigReal(1L, bits), -static_cast<long>(n) - 1));
        BigReal ratio = digamma_deriv_at0(n, bits) / est;
        CHECK(abs(ratio - BigReal(1L, bits)) < BigReal(0.001, 64));
    }
}

TEST_CASE("polylog_half at the endpoints and against brute force") {
    const long bits = 192;
    CHECK(polylog_half(BigReal(0L, bits), 1000, bits).is_zero());
    BigReal at_m1 = polylog_half(BigReal(-1L, bits), 1000, bits);
    // (sqrt(2)-1) zeta(1/2), digits frozen from the oracle
    BigReal expect = BigReal::from_string("-0.604898643421630370247265914235955499759762545", bits);
    CHECK(abs(at_m1 - expect) < tol2(-140));
    // z = -1/2: brute-force partial sum with geometric tail bound
    BigReal z(-0.5, bits);
    BigReal brute(0L, bits);
    BigReal zp(1L, bits);
    for (long n = 1; n <= 200; n++) {
        zp *= z;
        brute += zp / sqrt(BigReal(n, bits));
    }
    BigReal val = polylog_half(z, 1000, bits);
    CHECK(abs(val - brute) < tol2(-180));
    CHECK_THROWS_AS(polylog_half(BigReal(0.5, bits), 1000, bits), domain_error);
    CHECK_THROWS_AS(polylog_half(BigReal(-1L, bits), 3, bits), precision_error);
}
