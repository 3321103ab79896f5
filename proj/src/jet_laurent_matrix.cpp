#include "heckelab/jet_laurent_matrix.hpp"

#include <bit>
#include <cstdint>

#include "heckelab/errors.hpp"

namespace heckelab {

JetLaurentMatrix::JetLaurentMatrix(int rank, int jet_order)
    : rank_(rank),
      jet_order_(jet_order),
      entries_(static_cast<size_t>(rank) * rank, JetLaurentPoly(jet_order)) {
  if (rank < 1) throw DomainError("matrix rank must be positive");
  if (jet_order < 0) throw DomainError("negative jet order");
}

JetLaurentMatrix JetLaurentMatrix::identity(int rank, int jet_order) {
  JetLaurentMatrix m(rank, jet_order);
  for (int i = 0; i < rank; ++i) {
    m.at(i, i) = JetLaurentPoly::constant(jet_order, Scalar::one());
  }
  return m;
}

const JetLaurentPoly& JetLaurentMatrix::at(int row, int col) const {
  if (row < 0 || row >= rank_ || col < 0 || col >= rank_) {
    throw DomainError("matrix index out of range");
  }
  return entries_[static_cast<size_t>(row) * rank_ + col];
}

JetLaurentPoly& JetLaurentMatrix::at(int row, int col) {
  if (row < 0 || row >= rank_ || col < 0 || col >= rank_) {
    throw DomainError("matrix index out of range");
  }
  return entries_[static_cast<size_t>(row) * rank_ + col];
}

void JetLaurentMatrix::set(int row, int col, JetLaurentPoly value) {
  if (value.jet_order() != jet_order_) {
    throw DomainError("jet order mismatch between matrix and entry");
  }
  at(row, col) = std::move(value);
}

JetLaurentMatrix operator*(const JetLaurentMatrix& a, const JetLaurentMatrix& b) {
  if (a.rank_ != b.rank_ || a.jet_order_ != b.jet_order_) {
    throw DomainError("matrix shape or jet order mismatch");
  }
  JetLaurentMatrix out(a.rank_, a.jet_order_);
  for (int i = 0; i < a.rank_; ++i) {
    for (int k = 0; k < a.rank_; ++k) {
      const JetLaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.rank_; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

JetLaurentMatrix operator+(const JetLaurentMatrix& a, const JetLaurentMatrix& b) {
  if (a.rank_ != b.rank_ || a.jet_order_ != b.jet_order_) {
    throw DomainError("matrix shape or jet order mismatch");
  }
  JetLaurentMatrix out = a;
  for (size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

JetLaurentMatrix operator-(const JetLaurentMatrix& a, const JetLaurentMatrix& b) {
  if (a.rank_ != b.rank_ || a.jet_order_ != b.jet_order_) {
    throw DomainError("matrix shape or jet order mismatch");
  }
  JetLaurentMatrix out = a;
  for (size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

JetLaurentMatrix JetLaurentMatrix::times_t(long k) const {
  JetLaurentMatrix out = *this;
  for (auto& e : out.entries_) e = e.times_t(k);
  return out;
}

JetLaurentMatrix JetLaurentMatrix::times_scalar(const Scalar& c) const {
  JetLaurentMatrix out = *this;
  for (auto& e : out.entries_) e = e.times_scalar(c);
  return out;
}

JetLaurentMatrix JetLaurentMatrix::substitute_x_zero() const {
  JetLaurentMatrix out(rank_, 0);
  for (size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i].substitute_x_zero();
  }
  return out;
}

JetLaurentMatrix JetLaurentMatrix::with_jet_order(int jet_order) const {
  JetLaurentMatrix out(rank_, jet_order);
  for (size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i].with_jet_order(jet_order);
  }
  return out;
}

bool JetLaurentMatrix::x_free() const {
  for (const auto& e : entries_) {
    if (!e.x_free()) return false;
  }
  return true;
}

bool JetLaurentMatrix::polynomial_in_t() const {
  for (const auto& e : entries_) {
    if (!e.polynomial_in_t()) return false;
  }
  return true;
}

bool JetLaurentMatrix::polynomial_in_t_inverse() const {
  for (const auto& e : entries_) {
    if (!e.polynomial_in_t_inverse()) return false;
  }
  return true;
}

JetLaurentPoly JetLaurentMatrix::det() const {
  // cur[mask] accumulates, after processing the first popcount(mask) rows,
  // the signed sum over selections of the columns in mask.
  const int r = rank_;
  const uint32_t full = (r >= 31) ? 0u : (uint32_t{1} << r);
  if (full == 0) throw DomainError("rank too large for determinant expansion");
  std::vector<JetLaurentPoly> cur(full, JetLaurentPoly(jet_order_));
  cur[0] = JetLaurentPoly::constant(jet_order_, Scalar::one());
  for (int row = 0; row < r; ++row) {
    std::vector<JetLaurentPoly> next(full, JetLaurentPoly(jet_order_));
    for (uint32_t mask = 0; mask < full; ++mask) {
      if (std::popcount(mask) != row || cur[mask].is_zero()) continue;
      for (int col = 0; col < r; ++col) {
        uint32_t bit = uint32_t{1} << col;
        if (mask & bit) continue;
        const JetLaurentPoly& entry = at(row, col);
        if (entry.is_zero()) continue;
        // Appending this column to the selection creates one inversion per
        // already chosen column of larger index.
        JetLaurentPoly term = cur[mask] * entry;
        if (std::popcount(mask >> (col + 1)) % 2 != 0) term = -term;
        next[mask | bit] += term;
      }
    }
    cur = std::move(next);
  }
  return cur[full - 1];
}

JetLaurentMatrix JetLaurentMatrix::adjugate_x_free() const {
  JetLaurentMatrix adj(rank_, jet_order_);
  if (rank_ == 1) {
    adj.at(0, 0) = JetLaurentPoly::constant(jet_order_, Scalar::one());
    return adj;
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      JetLaurentMatrix minor(rank_ - 1, jet_order_);
      for (int r = 0, mr = 0; r < rank_; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < rank_; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      JetLaurentPoly cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = std::move(cof);
    }
  }
  return adj;
}

JetLaurentMatrix JetLaurentMatrix::invert() const {
  JetLaurentMatrix base = substitute_x_zero().with_jet_order(jet_order_);
  JetLaurentPoly base_det = base.det();
  if (!base_det.is_monomial()) {
    throw InvalidBundleError("transition not invertible near D");
  }
  long m = base_det.min_t_exp();
  Scalar c = base_det.coeff(m, 0);
  JetLaurentMatrix base_inv =
      base.adjugate_x_free().times_scalar(c.inverse()).times_t(-m);

  // Write the matrix as base + rest with rest divisible by x; then
  // inverse = sum_{j>=0} (-base_inv * rest)^j * base_inv, and each factor of
  // rest raises the x order, so the sum terminates within the jet.
  JetLaurentMatrix rest = *this - base;
  JetLaurentMatrix step = (base_inv * rest).times_scalar(Scalar(-1));
  JetLaurentMatrix out = base_inv;
  JetLaurentMatrix power = step;
  for (int j = 1; j <= jet_order_; ++j) {
    bool zero = true;
    for (const auto& e : power.entries_) {
      if (!e.is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) break;
    out = out + power * base_inv;
    power = power * step;
  }
  return out;
}

}  // namespace heckelab
