#pragma once

#include <vector>

#include "heckelab/p1_bundle.hpp"

namespace heckelab {

// Bundle on a neighborhood of the exceptional line of the blown-up plane,
// presented by its transition matrix between the two standard charts:
// chart A has coordinates (x, t), chart B has (y, s) with s = 1/t, y = x*t,
// and the exceptional line D is {x = 0} resp. {y = 0}. The matrix maps
// chart-A frame coordinates to chart-B coordinates and is tracked modulo
// x^{jet_order+1}. Contract: det at x = 0 is a single monomial c * t^m.
class BlowupBundle {
 public:
  explicit BlowupBundle(JetLaurentMatrix transition);

  int rank() const { return transition_.rank(); }
  int jet_order() const { return transition_.jet_order(); }
  const JetLaurentMatrix& transition() const { return transition_; }

  P1Transition restrict_to_D() const;

  bool operator==(const BlowupBundle& o) const {
    return transition_ == o.transition_;
  }

 private:
  JetLaurentMatrix transition_;
};

// Splitting type of the restriction to D (computed by birkhoff).
SplittingType restriction_splitting(const BlowupBundle& bundle);

// Instability spread of the restriction: a_1 - a_r. Always a nonnegative
// integer on the exceptional line.
long phi(const BlowupBundle& bundle);

// Gauge change by the Birkhoff factors of the restriction, extended
// constantly in x: the restricted transition becomes exactly
// diag(t^{-a_i}) with exponents descending, so the leading rows span the top
// blocks and every off-diagonal block vanishes at x = 0. top_blocks only
// selects how many leading exponent groups the caller intends to transform
// along; it is validated against the splitting (DomainError when out of
// range) and does not change the gauge.
BlowupBundle adapt_frame(const BlowupBundle& bundle, int top_blocks);

// Hecke transform along the subbundle spanned by the first sub_rank frame
// vectors over D. Pre: the frame is adapted, i.e. the lower-left block
// vanishes at x = 0 (else DomainError "frame not adapted") and one x-jet of
// precision remains (else PrecisionError "insufficient jet order").
// Blockwise, with f the top-left sub_rank square: f -> f, g -> g*x,
// h -> h/(x*t), q -> q/t. The result tracks one jet order less.
BlowupBundle hecke_transform(const BlowupBundle& bundle, int sub_rank);

// Tensor by the k-th power of the line bundle of D: transition times t^k,
// restriction exponents shift by -k (the restriction of that line bundle to
// D is O(-1)).
BlowupBundle twist_by_divisor(const BlowupBundle& bundle, long k);

struct HeckeStep {
  int sub_rank = 0;
  long phi_before = 0;
  long phi_after = 0;
  int jet_remaining = 0;

  bool operator==(const HeckeStep&) const = default;
};

// Step log of an optimization run, plus the splitting type at every state
// (states.size() == steps.size() + 1).
struct HeckeTrace {
  std::vector<HeckeStep> steps;
  std::vector<SplittingType> states;
};

enum class Schedule {
  top_block,   // always transform along the top block (k = 1)
  best_bound,  // transform along the top k blocks minimizing the 4-term bound
};

struct OptimizeResult {
  BlowupBundle bundle;
  HeckeTrace trace;
  // False when jet precision ran out before phi < 1; trace holds the partial
  // run in that case.
  bool reached_optimal = false;
};

// Repeated adapted Hecke transforms until phi < 1. Each round re-adapts to
// the current restriction and transforms along the scheduled top blocks;
// phi drops by at least 1 per round, so at most ceil(phi_0) rounds run.
OptimizeResult optimize(const BlowupBundle& bundle,
                        Schedule schedule = Schedule::top_block);

// Double Hecke transform: first along the top sub_rank frame vectors of the
// adapted bundle, then along the image block of the first transform. True
// iff the final splitting equals the input splitting shifted by +1 in every
// exponent, i.e. the composite is the twist by the negative of the
// exceptional divisor. Pre: 1 <= sub_rank < rank, jet_order >= 2.
bool involution_check(const BlowupBundle& bundle, int sub_rank);

}  // namespace heckelab
