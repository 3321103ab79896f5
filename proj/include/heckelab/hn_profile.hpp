#pragma once

#include <string>
#include <vector>

#include "heckelab/rational.hpp"

namespace heckelab {

// One slope-stability block: rank and slope of a graded piece. Labels are
// opaque strings carried through transforms for reporting; merged blocks
// accumulate the labels of their constituents. The engine never interprets
// them.
struct HNBlock {
  int rank = 0;
  Rational slope;
  std::vector<std::string> labels;

  friend bool operator==(const HNBlock& a, const HNBlock& b) {
    return a.rank == b.rank && a.slope == b.slope;  // labels are bookkeeping
  }
};

// Slope-decreasing block profile of a filtered sheaf on a projective space of
// the given dimension. Construction enforces: at least one block, positive
// ranks, strictly decreasing slopes, and each slope representable with a
// denominator dividing its block rank (slopes are degree/rank of a block, so
// anything else cannot occur and is rejected).
class HNProfile {
 public:
  explicit HNProfile(std::vector<HNBlock> blocks, int base_dimension = 2);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  int total_rank() const;
  const std::vector<HNBlock>& blocks() const { return blocks_; }
  int base_dimension() const { return base_dimension_; }
  // 1-based block index, matching the usual mu_1 > mu_2 > ... notation.
  const Rational& slope(int i) const { return blocks_[i - 1].slope; }

  friend bool operator==(const HNProfile& a, const HNProfile& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<HNBlock> blocks_;
  int base_dimension_;
};

// Instability spread mu_1 - mu_m. Zero iff semistable (single block).
Rational phi(const HNProfile& profile);

// Homogeneous-split model of a Hecke transform along the top k blocks:
// blocks 1..k keep their slope, blocks k+1..m gain +1; the result is
// re-sorted and equal slopes merge (ranks add, labels concatenate).
// Pre: 1 <= k <= m-1.
HNProfile hecke_profile(const HNProfile& profile, int k);

// Four-term instability bound for that transform:
// max{mu_{k+1} - mu_m, phi - 1, mu_{k+1} - mu_k + 1, mu_1 - mu_k}.
Rational hecke_bound(const HNProfile& profile, int k);

// Coarsened filtration 0 = j_0 < j_1 < ... < j_l = m with integer twists
// n_0 .. n_{l-1}: n_k = floor(mu_1 - mu_{j_k + 1}) and j_{k+1} is the largest
// s <= m with mu_1 - mu_s - n_k < 1. Groups collect blocks whose slopes land
// in a unit window below mu_1 after twisting.
struct PartialHN {
  std::vector<int> indices;  // j_0 = 0, ..., j_l = m
  std::vector<long> twists;  // n_0, ..., n_{l-1}

  bool operator==(const PartialHN&) const = default;
};

PartialHN partial_hn(const HNProfile& profile);

// Twists each partial-HN group by its n and re-merges: every resulting slope
// lands in (mu_1 - 1, mu_1], so the result always has phi < 1.
HNProfile gr_tilde(const HNProfile& profile);

// Uniform integer twist of every block.
HNProfile shifted(const HNProfile& profile, long k);

// The unique uniform twist placing mu_1 in [0, 1).
HNProfile normalize_twist(const HNProfile& profile);

// Profiles agree after normalize_twist (ranks and slopes; labels and base
// dimension are ignored).
bool equivalent(const HNProfile& a, const HNProfile& b);

}  // namespace heckelab
