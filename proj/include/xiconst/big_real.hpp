#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace xiconst {

/// Arbitrary-precision real backed by MPFR, round-to-nearest everywhere.
/// Every value carries its own precision; binary operations work at the
/// larger of the two operand precisions, so results are deterministic
/// functions of (operands, precisions).
class BigReal {
  public:
    BigReal() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
    explicit BigReal(long bits) { mpfr_init2(x_, clamp(bits)); mpfr_set_zero(x_, 1); }
    BigReal(double v, long bits) { mpfr_init2(x_, clamp(bits)); mpfr_set_d(x_, v, MPFR_RNDN); }
    BigReal(long v, long bits) { mpfr_init2(x_, clamp(bits)); mpfr_set_si(x_, v, MPFR_RNDN); }
    BigReal(unsigned long v, long bits) { mpfr_init2(x_, clamp(bits)); mpfr_set_ui(x_, v, MPFR_RNDN); }

    BigReal(const BigReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigReal() { mpfr_clear(x_); }

    static BigReal from_string(std::string_view dec, long bits);
    static BigReal from_mpz(const mpz_class& z, long bits);
    static BigReal from_mpq(const mpq_class& q, long bits);

    long precision() const { return mpfr_get_prec(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

    /// Decimal string with enough digits that parsing it back at the same
    /// precision reproduces the value exactly.
    std::string to_decimal() const;
    std::string to_decimal(std::size_t digits) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

    // constants at the requested precision
    static BigReal pi(long bits);
    static BigReal euler_gamma(long bits);
    static BigReal ln2(long bits);
    static BigReal ln_pi(long bits);

  private:
    using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigReal binop(const BigReal& a, const BigReal& b, mpfr_binop op) {
        BigReal r(std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_)));
        op(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    static long clamp(long bits) { return bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }
    mpfr_t x_;
};

BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal log1p(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal pow(const BigReal& base, const BigReal& e);
BigReal pow(const BigReal& base, long e);
BigReal pow_ui(unsigned long base, const BigReal& e);
BigReal ldexp2(const BigReal& a, long e); // a * 2^e, exact
BigReal floor(const BigReal& a);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

/// floor(-log10 |x|) style digit count of agreement between two values:
/// number of correct decimal digits in |a-b| relative to max(1, |a|, |b|).
long agreement_digits(const BigReal& a, const BigReal& b);

} // namespace xiconst
