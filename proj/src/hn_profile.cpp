#include "heckelab/hn_profile.hpp"

#include <algorithm>

#include "heckelab/errors.hpp"

namespace heckelab {

HNProfile::HNProfile(std::vector<HNBlock> blocks, int base_dimension)
    : blocks_(std::move(blocks)), base_dimension_(base_dimension) {
  if (base_dimension_ < 2) throw SchemaError("base dimension must be at least 2");
  if (blocks_.empty()) throw SchemaError("profile needs at least one block");
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const HNBlock& b = blocks_[i];
    if (b.rank < 1) throw SchemaError("block rank must be positive");
    if (i > 0 && !(blocks_[i - 1].slope > b.slope)) {
      throw SchemaError("slopes must be strictly decreasing");
    }
    if (!rational_is_integer(Rational(b.slope * b.rank))) {
      throw SchemaError("slope denominator must divide the block rank");
    }
  }
}

int HNProfile::total_rank() const {
  int r = 0;
  for (const HNBlock& b : blocks_) r += b.rank;
  return r;
}

Rational phi(const HNProfile& profile) {
  return Rational(profile.slope(1) - profile.slope(profile.block_count()));
}

namespace {

// Sorts by slope descending and merges equal slopes. Rank ties never matter:
// merged blocks are interchangeable. Stable so label order follows input.
HNProfile merged(std::vector<HNBlock> blocks, int base_dimension) {
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const HNBlock& a, const HNBlock& b) { return a.slope > b.slope; });
  std::vector<HNBlock> out;
  for (HNBlock& b : blocks) {
    if (!out.empty() && out.back().slope == b.slope) {
      out.back().rank += b.rank;
      out.back().labels.insert(out.back().labels.end(), b.labels.begin(),
                               b.labels.end());
    } else {
      out.push_back(std::move(b));
    }
  }
  return HNProfile(std::move(out), base_dimension);
}

}  // namespace

HNProfile hecke_profile(const HNProfile& profile, int k) {
  const int m = profile.block_count();
  if (k < 1 || k >= m) throw DomainError("transform index out of range");
  std::vector<HNBlock> blocks = profile.blocks();
  for (int i = k; i < m; ++i) blocks[i].slope += 1;
  return merged(std::move(blocks), profile.base_dimension());
}

Rational hecke_bound(const HNProfile& profile, int k) {
  const int m = profile.block_count();
  if (k < 1 || k >= m) throw DomainError("transform index out of range");
  Rational best(profile.slope(k + 1) - profile.slope(m));
  best = std::max(best, Rational(phi(profile) - 1));
  best = std::max(best, Rational(profile.slope(k + 1) - profile.slope(k) + 1));
  best = std::max(best, Rational(profile.slope(1) - profile.slope(k)));
  return best;
}

PartialHN partial_hn(const HNProfile& profile) {
  const int m = profile.block_count();
  PartialHN out;
  out.indices.push_back(0);
  while (out.indices.back() < m) {
    int j = out.indices.back();
    long n = rational_floor(Rational(profile.slope(1) - profile.slope(j + 1)));
    int next = j + 1;
    while (next < m &&
           profile.slope(1) - profile.slope(next + 1) - n < 1) {
      ++next;
    }
    out.indices.push_back(next);
    out.twists.push_back(n);
  }
  return out;
}

HNProfile gr_tilde(const HNProfile& profile) {
  PartialHN groups = partial_hn(profile);
  std::vector<HNBlock> blocks;
  for (size_t g = 0; g + 1 < groups.indices.size(); ++g) {
    for (int i = groups.indices[g]; i < groups.indices[g + 1]; ++i) {
      HNBlock b = profile.blocks()[i];
      b.slope += groups.twists[g];
      blocks.push_back(std::move(b));
    }
  }
  return merged(std::move(blocks), profile.base_dimension());
}

HNProfile shifted(const HNProfile& profile, long k) {
  std::vector<HNBlock> blocks = profile.blocks();
  for (HNBlock& b : blocks) b.slope += k;
  return HNProfile(std::move(blocks), profile.base_dimension());
}

HNProfile normalize_twist(const HNProfile& profile) {
  return shifted(profile, -rational_floor(profile.slope(1)));
}

bool equivalent(const HNProfile& a, const HNProfile& b) {
  return normalize_twist(a) == normalize_twist(b);
}

}  // namespace heckelab
