#include "heckelab/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

long rand_range(Rng& rng, long lo, long hi) {
  if (lo > hi) throw DomainError("empty range");
  return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

namespace {

// mpq_class(n, d) stores the pair as-is; reduce to lowest terms explicitly.
Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Nonzero Gaussian rational with small numerators; real three times out of
// four so purely rational cases stay common.
Scalar random_scalar(Rng& rng) {
  Rational re, im;
  do {
    re = make_rational(rand_range(rng, -3, 3), rand_range(rng, 1, 3));
    if (rand_range(rng, 0, 3) == 0) {
      im = make_rational(rand_range(rng, -3, 3), rand_range(rng, 1, 3));
    } else {
      im = 0;
    }
  } while (re == 0 && im == 0);
  return Scalar(re, im);
}

bool entry_degrees_in_window(const JetLaurentMatrix& m, long lo, long hi) {
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j) {
      for (const auto& [mono, c] : m.at(i, j).terms()) {
        if (mono.t_exp < lo || mono.t_exp > hi) return false;
      }
    }
  }
  return true;
}

// Monomial diagonal stirred by elementary moves; the determinant is the
// product of the diagonal monomials throughout.
JetLaurentMatrix random_x_free_part(Rng& rng, int rank,
                                    const BundleGenOptions& opt) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    JetLaurentMatrix m(rank, 0);
    for (int i = 0; i < rank; ++i) {
      m.at(i, i) = JetLaurentPoly::monomial(0, rand_range(rng, -2, 2), 0,
                                            random_scalar(rng));
    }
    int moves = static_cast<int>(rand_range(rng, 2, 4));
    for (int s = 0; s < moves && rank > 1; ++s) {
      int a = static_cast<int>(rand_range(rng, 0, rank - 1));
      int b = static_cast<int>(rand_range(rng, 0, rank - 2));
      if (b >= a) ++b;
      JetLaurentPoly c = JetLaurentPoly::monomial(0, rand_range(rng, -1, 1), 0,
                                                  random_scalar(rng));
      if (rand_range(rng, 0, 1) == 0) {
        for (int j = 0; j < rank; ++j) m.at(a, j) += c * m.at(b, j);
      } else {
        for (int i = 0; i < rank; ++i) m.at(i, a) += m.at(i, b) * c;
      }
    }
    if (entry_degrees_in_window(m, opt.min_t_exp, opt.max_t_exp)) return m;
  }
  throw std::logic_error("bundle generator failed to stay in the window");
}

}  // namespace

BlowupBundle random_bundle(Rng& rng, const BundleGenOptions& opt) {
  int rank = static_cast<int>(rand_range(rng, opt.min_rank, opt.max_rank));
  JetLaurentMatrix base = random_x_free_part(rng, rank, opt);
  long phi0 = birkhoff(P1Transition(base)).diagonal.phi();
  int jet = static_cast<int>(phi0) + opt.extra_jet;

  JetLaurentMatrix full = base.with_jet_order(jet);
  int tail = static_cast<int>(rand_range(rng, 0, 4));
  for (int s = 0; s < tail; ++s) {
    int i = static_cast<int>(rand_range(rng, 0, rank - 1));
    int j = static_cast<int>(rand_range(rng, 0, rank - 1));
    int x = static_cast<int>(
        rand_range(rng, 1, std::min<long>(opt.max_x_exp, jet > 0 ? jet : 1)));
    full.at(i, j).add_term(rand_range(rng, opt.min_t_exp, opt.max_t_exp), x,
                           random_scalar(rng));
  }
  return BlowupBundle(std::move(full));
}

HNProfile random_profile(Rng& rng, int max_total_rank) {
  while (true) {
    int count = static_cast<int>(rand_range(rng, 1, 3));
    std::vector<HNBlock> blocks;
    int total = 0;
    for (int i = 0; i < count; ++i) {
      int r = static_cast<int>(rand_range(rng, 1, 3));
      if (total + r > max_total_rank) break;
      total += r;
      long z = rand_range(rng, -3, 3);
      long c = rand_range(rng, 0, r - 1);
      blocks.push_back(HNBlock{r, make_rational(z * r + c, r), {}});
    }
    if (blocks.empty()) continue;
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const HNBlock& a, const HNBlock& b) {
                       return a.slope > b.slope;
                     });
    bool strict = true;
    for (size_t i = 1; i < blocks.size(); ++i) {
      if (blocks[i - 1].slope == blocks[i].slope) {
        strict = false;
        break;
      }
    }
    if (!strict) continue;
    return HNProfile(std::move(blocks));
  }
}

}  // namespace heckelab
