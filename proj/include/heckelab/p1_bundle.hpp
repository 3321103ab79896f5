#pragma once

#include <vector>

#include "heckelab/jet_laurent_matrix.hpp"

namespace heckelab {

// Multiset of splitting exponents of a bundle on the exceptional line,
// kept in descending order. Convention: a diagonal transition entry t^{-a}
// is the line bundle O(a), pinned by h0_oracle(O(a)) = a + 1 for a >= 0.
class SplittingType {
 public:
  // Sorts descending.
  explicit SplittingType(std::vector<long> exponents);

  int rank() const { return static_cast<int>(exponents_.size()); }
  const std::vector<long>& exponents() const { return exponents_; }
  long degree() const;         // sum of exponents
  long phi() const;            // max - min
  SplittingType shifted(long k) const;  // every exponent + k

  bool operator==(const SplittingType&) const = default;

 private:
  std::vector<long> exponents_;
};

// Transition matrix of a bundle on the exceptional line: x-free, invertible
// away from t = 0 and t = infinity, i.e. det = c * t^m with c != 0.
// Orientation: the matrix maps t-chart frame coordinates to t^{-1}-chart
// coordinates.
class P1Transition {
 public:
  // Throws DomainError if entries involve x, InvalidBundleError
  // ("not a bundle transition") if the determinant is not a monomial.
  explicit P1Transition(const JetLaurentMatrix& matrix);

  int rank() const { return matrix_.rank(); }
  const JetLaurentMatrix& matrix() const { return matrix_; }
  long det_t_exp() const { return det_t_exp_; }
  const Scalar& det_coeff() const { return det_coeff_; }

  bool operator==(const P1Transition& o) const { return matrix_ == o.matrix_; }

 private:
  JetLaurentMatrix matrix_;  // jet order 0
  long det_t_exp_;
  Scalar det_coeff_;
};

// T == gauge_infinity * diag(t^{-a_i}) * gauge_zero, exactly.
// gauge_zero is polynomial in t with constant nonzero determinant;
// gauge_infinity is polynomial in t^{-1}, likewise unimodular.
struct BirkhoffFactorization {
  JetLaurentMatrix gauge_infinity;
  SplittingType diagonal;
  JetLaurentMatrix gauge_zero;

  JetLaurentMatrix reconstruct() const;
};

// Exact factorization by column reduction over the Laurent ring: repeatedly
// cancel the top-degree column coefficients with unimodular column moves
// until the leading coefficient matrix is nonsingular. The total column
// degree strictly drops each round and is bounded below by the determinant
// exponent, so the sweep terminates.
BirkhoffFactorization birkhoff(const P1Transition& transition);

// dim H^0 of the bundle twisted by O(twist), computed as the kernel dimension
// of the exact linear system "v polynomial in t, deg v <= bound, every
// t-exponent of T*v at most twist". The degree bound (r-1)*hideg - m + twist
// comes from v = T^{-1}(T v) and Cramer's rule; it never cuts off a section.
// Independent of birkhoff by construction.
int h0_oracle(const P1Transition& transition, long twist);

// Recovers the splitting exponents from the h^0 staircase: the second
// difference of d -> h^0(E(d)) counts exponents equal to -d. Scans the
// window [-hideg, (r-1)*hideg - m] that provably contains every exponent.
SplittingType splitting_from_h0(const P1Transition& transition);

struct SplittingBlock {
  int rank;
  long slope;
  bool operator==(const SplittingBlock&) const = default;
};

// Groups equal exponents, descending: the slope-decreasing block profile of
// the splitting.
std::vector<SplittingBlock> hn_blocks(const SplittingType& splitting);

}  // namespace heckelab
