#include "heckelab/p1_bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

SplittingType::SplittingType(std::vector<long> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw DomainError("empty splitting type");
  std::sort(exponents_.begin(), exponents_.end(), std::greater<long>());
}

long SplittingType::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

long SplittingType::phi() const { return exponents_.front() - exponents_.back(); }

SplittingType SplittingType::shifted(long k) const {
  std::vector<long> out = exponents_;
  for (long& a : out) a += k;
  return SplittingType(std::move(out));
}

P1Transition::P1Transition(const JetLaurentMatrix& matrix)
    : matrix_(matrix.rank(), 0) {
  if (!matrix.x_free()) {
    throw DomainError("transition depends on the defining function");
  }
  matrix_ = matrix.with_jet_order(0);
  JetLaurentPoly d = matrix_.det();
  if (!d.is_monomial()) {
    throw InvalidBundleError("not a bundle transition");
  }
  det_t_exp_ = d.min_t_exp();
  det_coeff_ = d.coeff(det_t_exp_, 0);
}

JetLaurentMatrix BirkhoffFactorization::reconstruct() const {
  int r = diagonal.rank();
  JetLaurentMatrix diag(r, gauge_infinity.jet_order());
  for (int i = 0; i < r; ++i) {
    diag.at(i, i) = JetLaurentPoly::monomial(diag.jet_order(),
                                             -diagonal.exponents()[i], 0,
                                             Scalar::one());
  }
  return gauge_infinity * diag * gauge_zero;
}

namespace {

// Top t-degree of a column; the column is never zero while the determinant
// stays a nonzero monomial.
long column_degree(const JetLaurentMatrix& m, int col) {
  bool seen = false;
  long deg = 0;
  for (int i = 0; i < m.rank(); ++i) {
    const JetLaurentPoly& e = m.at(i, col);
    if (e.is_zero()) continue;
    long d = e.max_t_exp();
    if (!seen || d > deg) deg = d;
    seen = true;
  }
  if (!seen) throw std::logic_error("zero column in invertible transition");
  return deg;
}

// First kernel vector of an r x r scalar matrix in the canonical form
// produced by Gauss-Jordan: free coordinate of smallest column index set
// to 1, pivot coordinates solved. Empty result means nonsingular.
std::optional<std::vector<Scalar>> kernel_vector(std::vector<std::vector<Scalar>> h) {
  const int r = static_cast<int>(h.size());
  std::vector<int> pivot_row_of_col(r, -1);
  int row = 0;
  for (int col = 0; col < r && row < r; ++col) {
    int src = -1;
    for (int i = row; i < r; ++i) {
      if (!h[i][col].is_zero()) {
        src = i;
        break;
      }
    }
    if (src < 0) continue;
    std::swap(h[row], h[src]);
    Scalar inv = h[row][col].inverse();
    for (int c = col; c < r; ++c) h[row][c] = h[row][c] * inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || h[i][col].is_zero()) continue;
      Scalar f = h[i][col];
      for (int c = col; c < r; ++c) h[i][c] -= f * h[row][c];
    }
    pivot_row_of_col[col] = row;
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < r; ++col) {
    if (pivot_row_of_col[col] < 0) {
      free_col = col;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  std::vector<Scalar> v(r, Scalar());
  v[free_col] = Scalar::one();
  for (int col = 0; col < r; ++col) {
    if (pivot_row_of_col[col] >= 0) {
      v[col] = -h[pivot_row_of_col[col]][free_col];
    }
  }
  return v;
}

}  // namespace

BirkhoffFactorization birkhoff(const P1Transition& transition) {
  const int r = transition.rank();
  JetLaurentMatrix b = transition.matrix();
  JetLaurentMatrix v = JetLaurentMatrix::identity(r, 0);

  std::vector<long> deg(r);
  while (true) {
    for (int j = 0; j < r; ++j) deg[j] = column_degree(b, j);
    std::vector<std::vector<Scalar>> lead(r, std::vector<Scalar>(r));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) lead[i][j] = b.at(i, j).coeff(deg[j], 0);
    }
    auto alpha = kernel_vector(std::move(lead));
    if (!alpha) break;

    // The combination lands in the column of top degree among the support of
    // alpha, killing its leading coefficient; total degree strictly drops and
    // is bounded below by the determinant exponent.
    int tgt = -1;
    for (int j = 0; j < r; ++j) {
      if ((*alpha)[j].is_zero()) continue;
      if (tgt < 0 || deg[j] > deg[tgt]) tgt = j;
    }
    for (JetLaurentMatrix* m : {&b, &v}) {
      std::vector<JetLaurentPoly> col(r, JetLaurentPoly(0));
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          if ((*alpha)[j].is_zero()) continue;
          col[i] += m->at(i, j).times_scalar((*alpha)[j]).times_t(deg[tgt] - deg[j]);
        }
      }
      for (int i = 0; i < r; ++i) m->at(i, tgt) = std::move(col[i]);
    }
  }

  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&deg](int a, int b) { return deg[a] < deg[b]; });

  JetLaurentMatrix gauge_inf(r, 0);
  JetLaurentMatrix gauge_zero_inv(r, 0);
  std::vector<long> exps(r);
  for (int k = 0; k < r; ++k) {
    int j = order[k];
    exps[k] = -deg[j];
    for (int i = 0; i < r; ++i) {
      gauge_inf.at(i, k) = b.at(i, j).times_t(-deg[j]);
      gauge_zero_inv.at(i, k) = v.at(i, j);
    }
  }
  return BirkhoffFactorization{std::move(gauge_inf), SplittingType(std::move(exps)),
                               gauge_zero_inv.invert()};
}

namespace {

long max_entry_degree(const JetLaurentMatrix& m) {
  bool seen = false;
  long deg = 0;
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j) {
      const JetLaurentPoly& e = m.at(i, j);
      if (e.is_zero()) continue;
      long d = e.max_t_exp();
      if (!seen || d > deg) deg = d;
      seen = true;
    }
  }
  if (!seen) throw std::logic_error("zero transition matrix");
  return deg;
}

}  // namespace

int h0_oracle(const P1Transition& transition, long twist) {
  const int r = transition.rank();
  const JetLaurentMatrix& m = transition.matrix();
  const long hideg = max_entry_degree(m);
  const long bound = (r - 1) * hideg - transition.det_t_exp() + twist;
  if (bound < 0) return 0;

  // Unknown u = k*r + j is the coefficient of t^k in component j of the
  // section. One linear condition per too-high t-power of each row of T*v.
  const long unknowns = r * (bound + 1);
  std::vector<std::map<long, Scalar>> pivots_by_lead;
  std::map<long, int> lead_to_pivot;
  long rank = 0;
  for (int i = 0; i < r; ++i) {
    for (long e = twist + 1; e <= hideg + bound; ++e) {
      std::map<long, Scalar> row;
      for (int j = 0; j < r; ++j) {
        const JetLaurentPoly& entry = m.at(i, j);
        if (entry.is_zero()) continue;
        for (const auto& [mono, c] : entry.terms()) {
          long k = e - mono.t_exp;
          if (k < 0 || k > bound) continue;
          long u = k * r + j;
          auto it = row.find(u);
          if (it == row.end()) {
            row.emplace(u, c);
          } else {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
          }
        }
      }
      while (!row.empty()) {
        long lead = row.begin()->first;
        auto hit = lead_to_pivot.find(lead);
        if (hit == lead_to_pivot.end()) break;
        Scalar f = row.begin()->second;
        for (const auto& [u, c] : pivots_by_lead[hit->second]) {
          auto it = row.find(u);
          if (it == row.end()) {
            row.emplace(u, -(f * c));
          } else {
            it->second -= f * c;
            if (it->second.is_zero()) row.erase(it);
          }
        }
      }
      if (row.empty()) continue;
      Scalar inv = row.begin()->second.inverse();
      for (auto& [u, c] : row) c = c * inv;
      lead_to_pivot.emplace(row.begin()->first, pivots_by_lead.size());
      pivots_by_lead.push_back(std::move(row));
      ++rank;
    }
  }
  return static_cast<int>(unknowns - rank);
}

SplittingType splitting_from_h0(const P1Transition& transition) {
  const int r = transition.rank();
  const long hideg = max_entry_degree(transition.matrix());
  const long vmin = -hideg;
  const long vmax = (r - 1) * hideg - transition.det_t_exp();

  std::map<long, int> h0;
  for (long d = -vmax - 2; d <= -vmin; ++d) h0[d] = h0_oracle(transition, d);

  std::vector<long> exps;
  for (long a = vmax; a >= vmin; --a) {
    int mult = h0[-a] - 2 * h0[-a - 1] + h0[-a - 2];
    for (int k = 0; k < mult; ++k) exps.push_back(a);
  }
  if (static_cast<int>(exps.size()) != r) {
    throw std::logic_error("splitting staircase does not sum to the rank");
  }
  return SplittingType(std::move(exps));
}

std::vector<SplittingBlock> hn_blocks(const SplittingType& splitting) {
  std::vector<SplittingBlock> blocks;
  for (long a : splitting.exponents()) {
    if (!blocks.empty() && blocks.back().slope == a) {
      ++blocks.back().rank;
    } else {
      blocks.push_back(SplittingBlock{1, a});
    }
  }
  return blocks;
}

}  // namespace heckelab
