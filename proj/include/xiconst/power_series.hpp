#pragma once

#include <vector>
#include <type_traits>

#include "xiconst/big_complex.hpp"
#include "xiconst/big_real.hpp"
#include "xiconst/errors.hpp"

namespace xiconst {

/// Truncated power series a_0 + a_1 z + ... + a_N z^N. Algebra is exact to
/// truncation: coefficients through z^N of a product depend only on the
/// operands' coefficients through z^N.
template <typename T>
class PowerSeries {
  public:
    PowerSeries(std::size_t order, long bits)
        : bits_(bits), c_(order + 1, T(bits)) {}

    std::size_t order() const { return c_.size() - 1; }
    long bits() const { return bits_; }

    const T& operator[](std::size_t n) const { return c_.at(n); }
    T& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<T>& coefficients() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o) {
        for (std::size_t j = 0; j <= order() && j <= o.order(); j++) c_[j] += o.c_[j];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        for (std::size_t j = 0; j <= order() && j <= o.order(); j++) c_[j] -= o.c_[j];
        return *this;
    }
    PowerSeries& scale(const T& f) {
        for (auto& c : c_) c = c * f;
        return *this;
    }

  private:
    long bits_;
    std::vector<T> c_;
};

using RealSeries = PowerSeries<BigReal>;
using ComplexSeries = PowerSeries<BigComplex>;

namespace detail {

inline bool constant_term_invalid_for_log(const BigReal& a0) { return !(a0 > BigReal(0L, 64)); }
inline bool constant_term_invalid_for_log(const BigComplex& a0) { return a0.is_zero(); }
inline bool constant_term_zero(const BigReal& a0) { return a0.is_zero(); }
inline bool constant_term_zero(const BigComplex& a0) { return a0.is_zero(); }

template <typename T>
T one(long bits) {
    if constexpr (std::is_same_v<T, BigComplex>)
        return BigComplex(1.0, 0.0, bits);
    else
        return BigReal(1L, bits);
}

} // namespace detail

template <typename T>
PowerSeries<T> series_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    std::size_t N = std::min(a.order(), b.order());
    PowerSeries<T> r(N, std::max(a.bits(), b.bits()));
    for (std::size_t i = 0; i <= N; i++)
        for (std::size_t j = 0; i + j <= N; j++) r[i + j] += a[i] * b[j];
    return r;
}

template <typename T>
PowerSeries<T> series_recip(const PowerSeries<T>& a) {
    if (detail::constant_term_zero(a[0]))
        throw domain_error("series_recip: zero constant term");
    std::size_t N = a.order();
    PowerSeries<T> r(N, a.bits());
    r[0] = detail::one<T>(a.bits()) / a[0];
    for (std::size_t n = 1; n <= N; n++) {
        T acc(a.bits());
        for (std::size_t j = 1; j <= n; j++) acc += a[j] * r[n - j];
        r[n] = -(acc / a[0]);
    }
    return r;
}

/// log via the derivative recurrence: n c_n a_0 = n a_n - sum_j j c_j a_{n-j}.
template <typename T>
PowerSeries<T> series_log(const PowerSeries<T>& a) {
    if (detail::constant_term_invalid_for_log(a[0]))
        throw domain_error("series_log: constant term must be positive (real) / nonzero (complex)");
    std::size_t N = a.order();
    long bits = a.bits();
    PowerSeries<T> r(N, bits);
    r[0] = log(a[0]);
    for (std::size_t n = 1; n <= N; n++) {
        T acc = BigReal(static_cast<long>(n), bits) * a[n];
        for (std::size_t j = 1; j < n; j++) acc -= (BigReal(static_cast<long>(j), bits) * r[j]) * a[n - j];
        r[n] = acc / (BigReal(static_cast<long>(n), bits) * a[0]);
    }
    return r;
}

/// exp via e' = e a': n e_n = sum_{j=1..n} j a_j e_{n-j}.
template <typename T>
PowerSeries<T> series_exp(const PowerSeries<T>& a) {
    std::size_t N = a.order();
    long bits = a.bits();
    PowerSeries<T> r(N, bits);
    r[0] = exp(a[0]);
    for (std::size_t n = 1; n <= N; n++) {
        T acc(bits);
        for (std::size_t j = 1; j <= n; j++) acc += (BigReal(static_cast<long>(j), bits) * a[j]) * r[n - j];
        r[n] = acc / BigReal(static_cast<long>(n), bits);
    }
    return r;
}

/// Evaluate a real-coefficient series at a complex point by Horner.
BigComplex series_eval(const RealSeries& a, const BigComplex& z);
BigReal series_eval(const RealSeries& a, const BigReal& x);

} // namespace xiconst
