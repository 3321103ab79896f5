#include "heckelab/blowup_bundle.hpp"

#include <stdexcept>
#include <utility>

#include "heckelab/errors.hpp"
#include "heckelab/hn_profile.hpp"

namespace heckelab {

BlowupBundle::BlowupBundle(JetLaurentMatrix transition)
    : transition_(std::move(transition)) {
  JetLaurentPoly d = transition_.substitute_x_zero().det();
  if (!d.is_monomial()) {
    throw InvalidBundleError("transition not invertible near D");
  }
}

P1Transition BlowupBundle::restrict_to_D() const {
  return P1Transition(transition_.substitute_x_zero());
}

SplittingType restriction_splitting(const BlowupBundle& bundle) {
  return birkhoff(bundle.restrict_to_D()).diagonal;
}

long phi(const BlowupBundle& bundle) {
  return restriction_splitting(bundle).phi();
}

BlowupBundle adapt_frame(const BlowupBundle& bundle, int top_blocks) {
  BirkhoffFactorization f = birkhoff(bundle.restrict_to_D());
  int groups = static_cast<int>(hn_blocks(f.diagonal).size());
  if (top_blocks < 1 || top_blocks > groups) {
    throw DomainError("top block count out of range");
  }
  const int n = bundle.jet_order();
  JetLaurentMatrix left = f.gauge_infinity.invert().with_jet_order(n);
  JetLaurentMatrix right = f.gauge_zero.invert().with_jet_order(n);
  return BlowupBundle(left * bundle.transition() * right);
}

BlowupBundle hecke_transform(const BlowupBundle& bundle, int sub_rank) {
  const int r = bundle.rank();
  if (sub_rank < 1 || sub_rank > r) {
    throw DomainError("transform rank out of range");
  }
  const int n = bundle.jet_order();
  if (n < 1) throw PrecisionError("insufficient jet order");
  const JetLaurentMatrix& mat = bundle.transition();
  for (int i = sub_rank; i < r; ++i) {
    for (int j = 0; j < sub_rank; ++j) {
      if (!mat.at(i, j).substitute_x_zero().is_zero()) {
        throw DomainError("frame not adapted");
      }
    }
  }
  JetLaurentMatrix out(r, n - 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const JetLaurentPoly& e = mat.at(i, j);
      if (i < sub_rank) {
        out.at(i, j) = (j < sub_rank ? e : e.times_x()).with_jet_order(n - 1);
      } else if (j < sub_rank) {
        out.at(i, j) = e.divide_by_x().times_t(-1).with_jet_order(n - 1);
      } else {
        out.at(i, j) = e.times_t(-1).with_jet_order(n - 1);
      }
    }
  }
  return BlowupBundle(std::move(out));
}

BlowupBundle twist_by_divisor(const BlowupBundle& bundle, long k) {
  return BlowupBundle(bundle.transition().times_t(k));
}

namespace {

int schedule_top_blocks(const SplittingType& splitting, Schedule schedule) {
  if (schedule == Schedule::top_block) return 1;
  std::vector<HNBlock> blocks;
  for (const SplittingBlock& b : hn_blocks(splitting)) {
    blocks.push_back(HNBlock{b.rank, Rational(b.slope), {}});
  }
  HNProfile profile(std::move(blocks));
  int best = 1;
  Rational best_bound = hecke_bound(profile, 1);
  for (int k = 2; k < profile.block_count(); ++k) {
    Rational b = hecke_bound(profile, k);
    if (b < best_bound) {
      best = k;
      best_bound = b;
    }
  }
  return best;
}

}  // namespace

OptimizeResult optimize(const BlowupBundle& bundle, Schedule schedule) {
  BlowupBundle cur = bundle;
  HeckeTrace trace;
  trace.states.push_back(restriction_splitting(cur));
  while (trace.states.back().phi() >= 1) {
    if (cur.jet_order() < 1) {
      return OptimizeResult{std::move(cur), std::move(trace), false};
    }
    const SplittingType& split = trace.states.back();
    int k = schedule_top_blocks(split, schedule);
    std::vector<SplittingBlock> blocks = hn_blocks(split);
    int sub_rank = 0;
    for (int i = 0; i < k; ++i) sub_rank += blocks[i].rank;

    BlowupBundle next = hecke_transform(adapt_frame(cur, k), sub_rank);
    SplittingType next_split = restriction_splitting(next);
    long before = split.phi();
    long after = next_split.phi();
    if (after > before - 1) {
      throw std::logic_error("instability failed to drop under the transform");
    }
    trace.steps.push_back(HeckeStep{sub_rank, before, after, next.jet_order()});
    trace.states.push_back(std::move(next_split));
    cur = std::move(next);
  }
  return OptimizeResult{std::move(cur), std::move(trace), true};
}

bool involution_check(const BlowupBundle& bundle, int sub_rank) {
  const int r = bundle.rank();
  if (sub_rank < 1 || sub_rank >= r) {
    throw DomainError("transform rank out of range");
  }
  if (bundle.jet_order() < 2) throw PrecisionError("insufficient jet order");

  BlowupBundle adapted = adapt_frame(bundle, 1);
  SplittingType base = restriction_splitting(adapted);
  BlowupBundle first = hecke_transform(adapted, sub_rank);

  // Move the untouched block to the front so the second transform, which
  // always acts on the leading frame vectors, lands on the image of the
  // first one.
  const int rest = r - sub_rank;
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = (i + sub_rank) % r;
  JetLaurentMatrix swapped(r, first.jet_order());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      swapped.at(i, j) = first.transition().at(p[i], p[j]);
    }
  }
  BlowupBundle second = hecke_transform(BlowupBundle(std::move(swapped)), rest);
  return restriction_splitting(second) == base.shifted(1);
}

}  // namespace heckelab
