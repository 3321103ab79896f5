#pragma once

#include <string>

#include "heckelab/errors.hpp"
#include "heckelab/rational.hpp"

namespace heckelab {

// Element of Q(i), stored as two exact rationals. Every coefficient in this
// project lives here; floating point never enters.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long value) : re(value), im(0) {}  // NOLINT: implicit by design
  Scalar(Rational real_part, Rational imag_part = Rational(0))
      : re(std::move(real_part)), im(std::move(imag_part)) {}

  static Scalar one() { return Scalar(1); }
  static Scalar unit_i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(Rational(a.re + b.re), Rational(a.im + b.im));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(Rational(a.re - b.re), Rational(a.im - b.im));
  }
  friend Scalar operator-(const Scalar& a) {
    return Scalar(Rational(-a.re), Rational(-a.im));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(Rational(a.re * b.re - a.im * b.im),
                  Rational(a.re * b.im + a.im * b.re));
  }

  Scalar inverse() const {
    Rational norm(re * re + im * im);
    if (norm == 0) throw DomainError("division by zero scalar");
    return Scalar(Rational(re / norm), Rational(-im / norm));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// "a", "a+bi" style rendering for diagnostics only; documents serialize the
// two rational components separately.
std::string scalar_to_string(const Scalar& value);

}  // namespace heckelab
