#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "lg3/rational.hpp"

namespace lg3 {

/// Arbitrary-precision real, MPFR-backed, runtime-selectable decimal digits.
using BigFloat = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultDigits = 60;
constexpr unsigned kMinDigits = 30;

/// Scoped working precision (decimal digits). All BigFloat values created
/// inside the scope carry this precision; nesting restores on exit.
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned digits10) {
        if (digits10 < kMinDigits) digits10 = kMinDigits;
        prev_ = BigFloat::default_precision();
        BigFloat::default_precision(digits10);
    }
    ~PrecisionScope() { BigFloat::default_precision(prev_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned prev_;
};

/// Numeric comparison threshold at a given precision: 10^(6 - digits).
/// Residual contracts throughout the library are phrased against this scale.
[[nodiscard]] inline BigFloat zero_threshold(unsigned digits10) {
    return pow(BigFloat(10), 6 - (long)digits10);
}

/// Complex scalar as an explicit (re, im) pair of BigFloat.
struct CNum {
    BigFloat re, im;

    CNum() : re(0), im(0) {}
    CNum(long v) : re(v), im(0) {}  // NOLINT: implicit for scalar literals
    CNum(BigFloat r) : re(std::move(r)), im(0) {}
    CNum(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit CNum(const Rat& q) : re(q), im(0) {}

    CNum operator+(const CNum& o) const { return {re + o.re, im + o.im}; }
    CNum operator-(const CNum& o) const { return {re - o.re, im - o.im}; }
    CNum operator-() const { return {-re, -im}; }
    CNum operator*(const CNum& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CNum operator/(const CNum& o) const {
        BigFloat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    CNum& operator+=(const CNum& o) { re += o.re; im += o.im; return *this; }
    CNum& operator-=(const CNum& o) { re -= o.re; im -= o.im; return *this; }
    CNum& operator*=(const CNum& o) { *this = *this * o; return *this; }
    CNum& operator/=(const CNum& o) { *this = *this / o; return *this; }
    bool operator==(const CNum& o) const { return re == o.re && im == o.im; }

    [[nodiscard]] CNum conj() const { return {re, -im}; }
    [[nodiscard]] BigFloat abs2() const { return re * re + im * im; }
    [[nodiscard]] BigFloat abs() const { return sqrt(abs2()); }
};

[[nodiscard]] inline BigFloat abs_c(const CNum& z) { return z.abs(); }

}  // namespace lg3
