#pragma once

#include "xiconst/big_real.hpp"

namespace xiconst {

/// Complex number as a pair of BigReal. Same precision semantics as BigReal.
class BigComplex {
  public:
    BigComplex() = default;
    explicit BigComplex(long bits) : re_(bits), im_(bits) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(double re, double im, long bits) : re_(re, bits), im_(im, bits) {}

    const BigReal& real() const { return re_; }
    const BigReal& imag() const { return im_; }
    BigReal& real() { return re_; }
    BigReal& imag() { return im_; }

    long precision() const { return std::max(re_.precision(), im_.precision()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex operator-() const { return {-re_, -im_}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigReal& a, const BigComplex& b) {
        return {a * b.re_, a * b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) {
        return {a.re_ * b, a.im_ * b};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) {
        return {a.re_ / b, a.im_ / b};
    }

    BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

  private:
    BigReal re_, im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z); // principal branch
BigComplex pow(const BigComplex& base, unsigned long e);

} // namespace xiconst
