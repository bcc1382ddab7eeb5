#include "xiconst/big_complex.hpp"

#include "xiconst/errors.hpp"

namespace xiconst {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
    if (den.is_zero()) throw domain_error("BigComplex: division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.real());
    long bits = z.precision();
    BigReal s(bits), c(bits);
    mpfr_sin_cos(s.raw(), c.raw(), z.imag().raw(), MPFR_RNDN);
    return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw domain_error("BigComplex: log of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& base, unsigned long e) {
    BigComplex acc(1.0, 0.0, base.precision());
    BigComplex b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace xiconst
