#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckelab/blowup_bundle.hpp"
#include "heckelab/hn_profile.hpp"
#include "heckelab/p1_bundle.hpp"

namespace testutil {

using namespace heckelab;

inline Rational frac(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// c * t^t_exp * x^x_exp at the given jet order.
inline JetLaurentPoly mono(int jet, long t_exp, int x_exp = 0, long num = 1,
                           long den = 1) {
  return JetLaurentPoly::monomial(jet, t_exp, x_exp, Scalar(frac(num, den)));
}

inline JetLaurentMatrix mat(int jet,
                            std::vector<std::vector<JetLaurentPoly>> rows) {
  JetLaurentMatrix m(static_cast<int>(rows.size()), jet);
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j) {
      m.set(i, j, rows[i][j].with_jet_order(jet));
    }
  }
  return m;
}

// Profile from (rank, slope-string) pairs, e.g. {{2, "3/2"}, {1, "0"}}.
inline HNProfile prof(std::vector<std::pair<int, std::string>> blocks,
                      int base_dimension = 2) {
  std::vector<HNBlock> out;
  for (auto& [rank, slope] : blocks) {
    out.push_back(HNBlock{rank, rational_from_string(slope), {}});
  }
  return HNProfile(std::move(out), base_dimension);
}

inline std::vector<long> exps(const SplittingType& s) { return s.exponents(); }

}  // namespace testutil
