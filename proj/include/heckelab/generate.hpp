#pragma once

#include <cstdint>
#include <random>

#include "heckelab/blowup_bundle.hpp"
#include "heckelab/hn_profile.hpp"

namespace heckelab {

using Rng = std::mt19937_64;

// Uniform-ish integer in [lo, hi]. Deliberately avoids
// std::uniform_int_distribution, whose output is implementation-defined;
// the slight modulo bias is irrelevant for test-case generation and the
// stream is reproducible across platforms.
long rand_range(Rng& rng, long lo, long hi);

struct BundleGenOptions {
  int min_rank = 1;
  int max_rank = 3;
  long min_t_exp = -3;  // every entry exponent stays in this window
  long max_t_exp = 3;
  int max_x_exp = 3;
  // Jet orders are set to ceil(phi_0) + extra_jet so the optimizer (and, for
  // extra_jet >= 2, the double Hecke transform) always has room.
  int extra_jet = 2;
};

// Random transition that is exactly invertible near D: a monomial diagonal
// stirred by a few elementary row/column moves (determinant stays a
// monomial), plus a sparse x-jet tail. Entry degrees outside the window are
// rejected and redrawn, deterministically in the rng stream.
BlowupBundle random_bundle(Rng& rng, const BundleGenOptions& options = {});

// Random profile with at most max_total_rank total rank, strictly decreasing
// slopes, and every slope denominator dividing its block rank.
HNProfile random_profile(Rng& rng, int max_total_rank = 6);

}  // namespace heckelab
