#include "heckelab/verify.hpp"

#include <exception>
#include <sstream>

#include "heckelab/generate.hpp"

namespace heckelab {

namespace {

template <typename Case>
SuiteResult run_suite(const std::string& name, int count, std::uint64_t seed,
                      Case one_case) {
  SuiteResult result;
  result.suite = name;
  result.seed = seed;
  result.requested = count;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    std::string detail;
    try {
      detail = one_case(rng);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    ++result.checked;
    if (!detail.empty()) result.failures.push_back(VerifyFailure{i, detail});
  }
  return result;
}

Rational profile_degree(const HNProfile& p) {
  Rational d = 0;
  for (const HNBlock& b : p.blocks()) d += Rational(b.slope * b.rank);
  return d;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SuiteResult run_involution_suite(int count, std::uint64_t seed) {
  BundleGenOptions opt;
  opt.min_rank = 2;
  return run_suite("involution", count, seed, [&opt](Rng& rng) -> std::string {
    BlowupBundle bundle = random_bundle(rng, opt);
    int s = static_cast<int>(rand_range(rng, 1, bundle.rank() - 1));
    if (!involution_check(bundle, s)) {
      std::ostringstream msg;
      msg << "rank " << bundle.rank() << " sub rank " << s
          << ": double transform is not the divisor twist";
      return msg.str();
    }
    return {};
  });
}

SuiteResult run_descent_suite(int count, std::uint64_t seed) {
  return run_suite("descent", count, seed, [](Rng& rng) -> std::string {
    BlowupBundle bundle = random_bundle(rng);
    long phi0 = phi(bundle);
    OptimizeResult res = optimize(bundle);
    if (!res.reached_optimal) return "ran out of jet precision";
    if (res.trace.states.size() != res.trace.steps.size() + 1) {
      return "trace shape mismatch";
    }
    if (res.trace.states.front().phi() != phi0) return "trace start mismatch";
    if (res.trace.states.back().phi() != 0) {
      return "final restriction is not homogeneous";
    }
    if (static_cast<long>(res.trace.steps.size()) > phi0) {
      return "more steps than the initial instability";
    }
    for (const HeckeStep& step : res.trace.steps) {
      if (step.phi_after > step.phi_before - 1) {
        return "a step failed to drop the instability";
      }
    }
    return {};
  });
}

SuiteResult run_oracle_suite(int count, std::uint64_t seed) {
  return run_suite("oracle", count, seed, [](Rng& rng) -> std::string {
    BlowupBundle bundle = random_bundle(rng);
    P1Transition t = bundle.restrict_to_D();
    BirkhoffFactorization f = birkhoff(t);
    if (f.reconstruct() != t.matrix()) {
      return "factorization does not reconstruct the transition";
    }
    if (!f.gauge_zero.polynomial_in_t() ||
        !f.gauge_zero.det().is_nonzero_constant()) {
      return "inner gauge is not unimodular polynomial";
    }
    if (!f.gauge_infinity.polynomial_in_t_inverse() ||
        !f.gauge_infinity.det().is_nonzero_constant()) {
      return "outer gauge is not unimodular antipolynomial";
    }
    if (!(f.diagonal == splitting_from_h0(t))) {
      return "splitting disagrees with the section-count staircase";
    }
    return {};
  });
}

SuiteResult run_discreteness_suite(int count, std::uint64_t seed) {
  return run_suite("discreteness", count, seed, [](Rng& rng) -> std::string {
    HNProfile p = random_profile(rng);
    const int m = p.block_count();

    Rational spread = phi(p);
    Rational scaled(spread * factorial(p.total_rank()));
    if (spread < 0 || !rational_is_integer(scaled)) {
      return "instability is not discrete at this rank";
    }

    for (int k = 1; k < m; ++k) {
      HNProfile h = hecke_profile(p, k);
      if (phi(h) > hecke_bound(p, k)) return "bound misses a transform";
      if (h.total_rank() != p.total_rank()) return "rank not conserved";
      long gain = 0;
      for (int i = k + 1; i <= m; ++i) gain += p.blocks()[i - 1].rank;
      if (profile_degree(h) != profile_degree(p) + gain) {
        return "degree bookkeeping broken";
      }
    }

    HNProfile g = gr_tilde(p);
    if (!(phi(g) < 1)) return "coarsening is not almost homogeneous";
    if (!(gr_tilde(g) == g)) return "coarsening is not idempotent";
    if (g.total_rank() != p.total_rank()) return "coarsening loses rank";
    for (const HNBlock& b : g.blocks()) {
      if (!(b.slope <= p.slope(1)) || !(b.slope > p.slope(1) - 1)) {
        return "twisted slope escapes the unit window";
      }
    }

    if (phi(p) < 1) {
      for (int k = 1; k < m; ++k) {
        if (!(hecke_bound(p, k) < 1)) {
          return "stable window not preserved by the bound";
        }
      }
    }
    return {};
  });
}

}  // namespace heckelab
