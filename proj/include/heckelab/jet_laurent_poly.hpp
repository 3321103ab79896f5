#pragma once

#include <map>
#include <string>

#include "heckelab/scalar.hpp"

namespace heckelab {

// Exponent pair of one term c * t^t_exp * x^x_exp. t is the coordinate along
// the exceptional curve (Laurent: t_exp may be negative), x is the defining
// function of the curve (x_exp >= 0, tracked only up to the jet order).
struct Monomial {
  long t_exp;
  int x_exp;

  bool operator==(const Monomial&) const = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
    return a.x_exp < b.x_exp;
  }
};

// Sparse element of Q(i)[t, t^{-1}][x] / (x^{jet_order+1}).
// Invariants: no zero coefficients stored, every x_exp in [0, jet_order].
// Binary operations require both sides to carry the same jet order.
class JetLaurentPoly {
 public:
  explicit JetLaurentPoly(int jet_order = 0);

  static JetLaurentPoly constant(int jet_order, const Scalar& c);
  static JetLaurentPoly monomial(int jet_order, long t_exp, int x_exp,
                                 const Scalar& c);

  int jet_order() const { return jet_order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  Scalar coeff(long t_exp, int x_exp) const;
  // Accumulates; silently drops terms beyond the jet order and zero sums.
  void add_term(long t_exp, int x_exp, const Scalar& c);

  JetLaurentPoly operator-() const;
  JetLaurentPoly& operator+=(const JetLaurentPoly& o);
  JetLaurentPoly& operator-=(const JetLaurentPoly& o);
  friend JetLaurentPoly operator+(JetLaurentPoly a, const JetLaurentPoly& b) {
    a += b;
    return a;
  }
  friend JetLaurentPoly operator-(JetLaurentPoly a, const JetLaurentPoly& b) {
    a -= b;
    return a;
  }
  friend JetLaurentPoly operator*(const JetLaurentPoly& a,
                                  const JetLaurentPoly& b);

  JetLaurentPoly times_scalar(const Scalar& c) const;
  JetLaurentPoly times_t(long k) const;
  JetLaurentPoly times_x() const;

  // Exact division by x. Every term must carry x_exp >= 1; the quotient is
  // only trustworthy one jet order below the input, which the caller tracks.
  JetLaurentPoly divide_by_x() const;

  // Restriction to {x = 0}; the result carries jet order 0.
  JetLaurentPoly substitute_x_zero() const;

  // Re-truncates (lowering) or widens the tracked jet window (raising treats
  // the absent higher jets as zero, which is only sound for data that is
  // exact in x, e.g. gauges extended constantly in x).
  JetLaurentPoly with_jet_order(int jet_order) const;

  bool x_free() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool polynomial_in_t() const;          // every t_exp >= 0
  bool polynomial_in_t_inverse() const;  // every t_exp <= 0
  // True for c * t^0 * x^0, c != 0.
  bool is_nonzero_constant() const;

  // Pre for both: not the zero polynomial.
  long min_t_exp() const;
  long max_t_exp() const;

  bool operator==(const JetLaurentPoly&) const = default;

  // Human-readable rendering for diagnostics and test failure messages.
  std::string to_string() const;

 private:
  int jet_order_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace heckelab
