#pragma once

#include <vector>

#include "heckelab/jet_laurent_poly.hpp"

namespace heckelab {

// Square matrix over the jet-Laurent ring with one shared jet order.
class JetLaurentMatrix {
 public:
  JetLaurentMatrix(int rank, int jet_order);
  static JetLaurentMatrix identity(int rank, int jet_order);

  int rank() const { return rank_; }
  int jet_order() const { return jet_order_; }

  const JetLaurentPoly& at(int row, int col) const;
  JetLaurentPoly& at(int row, int col);
  void set(int row, int col, JetLaurentPoly value);

  friend JetLaurentMatrix operator*(const JetLaurentMatrix& a,
                                    const JetLaurentMatrix& b);
  friend JetLaurentMatrix operator+(const JetLaurentMatrix& a,
                                    const JetLaurentMatrix& b);
  friend JetLaurentMatrix operator-(const JetLaurentMatrix& a,
                                    const JetLaurentMatrix& b);
  bool operator==(const JetLaurentMatrix&) const = default;

  JetLaurentMatrix times_t(long k) const;
  JetLaurentMatrix times_scalar(const Scalar& c) const;
  JetLaurentMatrix substitute_x_zero() const;  // jet order 0 result
  JetLaurentMatrix with_jet_order(int jet_order) const;

  bool x_free() const;
  bool polynomial_in_t() const;
  bool polynomial_in_t_inverse() const;

  // Exact determinant mod x^{jet_order+1}. Division-free expansion over
  // column subsets: the truncated jet ring has zero divisors, so fraction-free
  // elimination is not available, and at these ranks the subset walk is cheap.
  JetLaurentPoly det() const;

  // Exact two-sided inverse mod x^{jet_order+1}. Requires det at x = 0 to be
  // a single monomial c * t^m; throws InvalidBundleError otherwise. The x-jet
  // part is folded in by the terminating geometric series around the x = 0
  // inverse.
  JetLaurentMatrix invert() const;

 private:
  int rank_;
  int jet_order_;
  std::vector<JetLaurentPoly> entries_;  // row-major

  JetLaurentMatrix adjugate_x_free() const;  // pre: x_free()
};

}  // namespace heckelab
