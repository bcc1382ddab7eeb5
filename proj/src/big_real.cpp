#include "xiconst/big_real.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "xiconst/errors.hpp"

namespace xiconst {

BigReal BigReal::from_string(std::string_view dec, long bits) {
    BigReal r(bits);
    std::string s(dec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw parse_error("BigReal: cannot parse decimal '" + s + "'");
    return r;
}

BigReal BigReal::from_mpz(const mpz_class& z, long bits) {
    BigReal r(bits);
    mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_mpq(const mpq_class& q, long bits) {
    BigReal r(bits);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

namespace {

std::string format_digits(mpfr_srcptr x, std::size_t digits) {
    if (mpfr_nan_p(x)) return "nan";
    if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!m.empty() && m[0] == '-') { sign = "-"; m.erase(0, 1); }
    // strip trailing zeros but keep at least one digit
    std::size_t last = m.find_last_not_of('0');
    m.erase(last + 1);
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace

std::string BigReal::to_decimal() const {
    // digits = 0 asks MPFR for the minimal count that round-trips exactly
    return format_digits(x_, 0);
}

std::string BigReal::to_decimal(std::size_t digits) const {
    return format_digits(x_, digits);
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(long bits) {
    BigReal r(bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::euler_gamma(long bits) {
    BigReal r(bits);
    mpfr_const_euler(r.x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::ln2(long bits) {
    BigReal r(bits);
    mpfr_const_log2(r.x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::ln_pi(long bits) {
    BigReal p = BigReal::pi(bits + 8);
    BigReal r(bits);
    mpfr_log(r.raw(), p.raw(), MPFR_RNDN);
    return r;
}

namespace {

using unop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigReal apply(const BigReal& a, unop f) {
    BigReal r(a.precision());
    f(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

} // namespace

BigReal abs(const BigReal& a) { return apply(a, mpfr_abs); }
BigReal sqrt(const BigReal& a) { return apply(a, mpfr_sqrt); }
BigReal exp(const BigReal& a) { return apply(a, mpfr_exp); }

BigReal log(const BigReal& a) {
    if (a.sign() <= 0) throw domain_error("log: argument must be positive");
    return apply(a, mpfr_log);
}

BigReal log1p(const BigReal& a) { return apply(a, mpfr_log1p); }
BigReal sin(const BigReal& a) { return apply(a, mpfr_sin); }
BigReal cos(const BigReal& a) { return apply(a, mpfr_cos); }
BigReal floor(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

BigReal pow(const BigReal& base, const BigReal& e) {
    BigReal r(std::max(base.precision(), e.precision()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, long e) {
    BigReal r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

BigReal pow_ui(unsigned long base, const BigReal& e) {
    BigReal r(e.precision());
    mpfr_ui_pow(r.raw(), base, e.raw(), MPFR_RNDN);
    return r;
}

BigReal ldexp2(const BigReal& a, long e) {
    BigReal r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r(std::max(y.precision(), x.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

long agreement_digits(const BigReal& a, const BigReal& b) {
    BigReal diff = abs(a - b);
    BigReal scale = max(BigReal(1L, 64), max(abs(a), abs(b)));
    if (diff.is_zero()) return static_cast<long>(std::floor(a.precision() * 0.3010299957));
    BigReal rel = diff / scale;
    // -log10(rel) via exponent arithmetic; good to +-1 digit which is all we need
    double l2 = static_cast<double>(mpfr_get_exp(rel.raw()));
    return static_cast<long>(std::floor(-l2 * 0.3010299957));
}

} // namespace xiconst
